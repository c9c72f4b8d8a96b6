#include "jointspec/hikes/walks.hpp"

#include <stdexcept>

namespace jointspec::hikes {

namespace {

void extend_walk(const std::vector<std::vector<int>>& adj, std::size_t max_length,
                 const std::function<bool(int)>& continue_through,
                 const std::function<void(const std::vector<int>&)>& visit, std::vector<int>& walk) {
  for (int next : adj[static_cast<std::size_t>(walk.back())]) {
    walk.push_back(next);
    visit(walk);
    if (walk.size() - 1 < max_length && continue_through(next)) extend_walk(adj, max_length, continue_through, visit, walk);
    walk.pop_back();
  }
}

}  // namespace

void for_each_walk(const std::vector<std::vector<int>>& adj, int start, std::size_t max_length,
                   const std::function<bool(int)>& continue_through,
                   const std::function<void(const std::vector<int>& walk)>& visit) {
  if (max_length == 0) return;
  std::vector<int> walk{start};
  extend_walk(adj, max_length, continue_through, visit, walk);
}

Hike project_walk(const CycleCatalog& catalog, const std::vector<int>& closed_walk) {
  if (closed_walk.empty() || closed_walk.front() != closed_walk.back())
    throw std::invalid_argument("project_walk expects a closed walk");
  std::vector<int> word;
  std::vector<int> path{closed_walk.front()};
  std::vector<int> position(catalog.vertex_count(), -1);
  position[static_cast<std::size_t>(closed_walk.front())] = 0;
  for (std::size_t t = 1; t < closed_walk.size(); ++t) {
    const int v = closed_walk[t];
    const int at = position[static_cast<std::size_t>(v)];
    if (at < 0) {
      position[static_cast<std::size_t>(v)] = static_cast<int>(path.size());
      path.push_back(v);
      continue;
    }
    // Erase the loop path[at..] -> v.
    std::vector<int> loop(path.begin() + at, path.end());
    const auto idx = catalog.index_of(canonical_rotation(loop));
    if (!idx) throw std::logic_error("walk closes a cycle missing from the catalog");
    word.push_back(*idx);
    for (std::size_t k = static_cast<std::size_t>(at) + 1; k < path.size(); ++k)
      position[static_cast<std::size_t>(path[k])] = -1;
    path.resize(static_cast<std::size_t>(at) + 1);
  }
  return normal_form(catalog, word);
}

}  // namespace jointspec::hikes
