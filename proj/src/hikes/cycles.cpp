#include "jointspec/hikes/cycles.hpp"

#include <algorithm>
#include <stdexcept>

namespace jointspec::hikes {

namespace {

void extend(const WeightedGraph& g, int start, std::vector<int>& path, std::vector<bool>& on_path,
            std::vector<SimpleCycle>& out) {
  const int last = path.back();
  for (int next : g.neighbors(last)) {
    if (next == last) continue;
    if (next == start) {
      // Cycles are grown from their minimal vertex only, so each is found once.
      SimpleCycle c;
      c.vertices = path;
      c.mask = mask_of(path);
      out.push_back(std::move(c));
      continue;
    }
    if (next < start || on_path[static_cast<std::size_t>(next)]) continue;
    path.push_back(next);
    on_path[static_cast<std::size_t>(next)] = true;
    extend(g, start, path, on_path, out);
    on_path[static_cast<std::size_t>(next)] = false;
    path.pop_back();
  }
}

}  // namespace

std::vector<SimpleCycle> enumerate_simple_cycles(const WeightedGraph& g) {
  const std::size_t n = g.size();
  if (n > 64) throw std::domain_error("cycle enumeration supports at most 64 vertices");
  std::vector<SimpleCycle> out;
  std::vector<bool> on_path(n, false);
  for (std::size_t s = 0; s < n; ++s) {
    const int start = static_cast<int>(s);
    if (g(s, s) != 0.0) {
      SimpleCycle loop;
      loop.vertices = {start};
      loop.mask = VertexMask{1} << start;
      out.push_back(loop);
    }
    std::vector<int> path{start};
    on_path[s] = true;
    extend(g, start, path, on_path, out);
    on_path[s] = false;
  }
  std::sort(out.begin(), out.end(), [](const SimpleCycle& a, const SimpleCycle& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.vertices < b.vertices;
  });
  return out;
}

std::vector<int> canonical_rotation(std::vector<int> cycle) {
  if (cycle.empty()) return cycle;
  auto it = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), it, cycle.end());
  return cycle;
}

CycleCatalog::CycleCatalog(const WeightedGraph& g) : n_(g.size()), cycles_(enumerate_simple_cycles(g)) {
  for (std::size_t i = 0; i < cycles_.size(); ++i) index_[cycles_[i].vertices] = static_cast<int>(i);
}

std::optional<int> CycleCatalog::index_of(const std::vector<int>& canonical) const {
  auto it = index_.find(canonical);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

}  // namespace jointspec::hikes
