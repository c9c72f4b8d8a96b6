#include "jointspec/verify/families.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace jointspec::verify {

std::vector<WeightedGraph> random_integer_graphs(std::size_t count, std::size_t nmin, std::size_t nmax, int lo, int hi,
                                                 Rng& rng) {
  std::vector<WeightedGraph> out;
  for (std::size_t t = 0; t < count; ++t) {
    const auto n = static_cast<std::size_t>(rng.uniform_int(static_cast<long long>(nmin), static_cast<long long>(nmax)));
    out.emplace_back(graphs::random_integer_symmetric(n, lo, hi, rng), "random integer #" + std::to_string(t + 1));
  }
  return out;
}

std::vector<WeightedGraph> random_simple_graphs(std::size_t count, std::size_t nmin, std::size_t nmax, Rng& rng) {
  std::vector<WeightedGraph> out;
  for (std::size_t t = 0; t < count; ++t) {
    const auto n = static_cast<std::size_t>(rng.uniform_int(static_cast<long long>(nmin), static_cast<long long>(nmax)));
    const double p = rng.uniform(0.3, 0.8);
    const WeightedGraph g = graphs::gnp(n, p, rng);
    out.emplace_back(g.weights(), "random simple #" + std::to_string(t + 1));
  }
  return out;
}

std::vector<WeightedGraph> small_graph_family(std::size_t n_max, Rng& rng) {
  std::vector<WeightedGraph> out;
  out.push_back(graphs::empty(std::min<std::size_t>(2, n_max)));
  for (std::size_t n = 1; n <= n_max; ++n) out.push_back(graphs::path(n));
  for (std::size_t n = 3; n <= n_max; ++n) out.push_back(graphs::cycle(n));
  for (std::size_t n = 3; n <= n_max; ++n) out.push_back(graphs::complete(n));
  for (std::size_t leaves = 3; leaves + 1 <= n_max; ++leaves) out.push_back(graphs::star(leaves));
  for (int t = 0; t < 3; ++t) {
    const WeightedGraph g = graphs::gnp(n_max, 0.5, rng);
    out.emplace_back(g.weights(), "G(" + std::to_string(n_max) + ",0.5) #" + std::to_string(t + 1));
  }
  for (int t = 0; t < 3; ++t) {
    const auto n = std::min<std::size_t>(n_max, 4);
    out.emplace_back(graphs::random_integer_symmetric(n, -1, 2, rng), "weighted #" + std::to_string(t + 1));
  }
  return out;
}

std::vector<int> random_subset(std::size_t n, std::size_t max_size, Rng& rng) {
  const auto size = static_cast<std::size_t>(rng.uniform_int(1, static_cast<long long>(std::min(n, max_size))));
  std::vector<int> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<int>(i);
  for (std::size_t i = 0; i < size; ++i)
    std::swap(all[i], all[static_cast<std::size_t>(rng.uniform_int(static_cast<long long>(i), static_cast<long long>(n - 1)))]);
  std::vector<int> u(all.begin(), all.begin() + static_cast<long>(size));
  std::sort(u.begin(), u.end());
  return u;
}

std::vector<std::vector<int>> subsets_of_size(std::size_t n, std::size_t size) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int from) {
    if (cur.size() == size) {
      out.push_back(cur);
      return;
    }
    for (int v = from; v < static_cast<int>(n); ++v) {
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

std::vector<std::vector<int>> nonempty_subsets(std::size_t n) {
  std::vector<std::vector<int>> out;
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<int> u;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i)) u.push_back(static_cast<int>(i));
    out.push_back(std::move(u));
  }
  return out;
}

std::string subset_str(std::span<const int> u) {
  std::string s = "{";
  for (std::size_t i = 0; i < u.size(); ++i) s += (i ? "," : "") + std::to_string(u[i] + 1);
  return s + "}";
}

}  // namespace jointspec::verify
