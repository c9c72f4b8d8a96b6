#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "jointspec/graph.hpp"

namespace jointspec::hikes {

using VertexMask = std::uint64_t;

inline VertexMask mask_of(std::span<const int> vertices) {
  VertexMask m = 0;
  for (int v : vertices) m |= VertexMask{1} << v;
  return m;
}

/// Closed path visiting no vertex twice, rotated to start at its minimal vertex.
struct SimpleCycle {
  std::vector<int> vertices;
  VertexMask mask = 0;

  std::size_t length() const { return vertices.size(); }
  /// prod of a_{v_t v_{t+1}} along the cycle.
  template <class T>
  T weight(const linalg::Matrix<T>& a) const {
    T w = T(1);
    for (std::size_t t = 0; t < vertices.size(); ++t)
      w *= a(static_cast<std::size_t>(vertices[t]), static_cast<std::size_t>(vertices[(t + 1) % vertices.size()]));
    return w;
  }
  /// Number of vertices of the cycle inside `u`.
  int visits(VertexMask u) const { return __builtin_popcountll(mask & u); }
};

/// All simple cycles of the symmetric digraph of g: self-loops, one 2-cycle per
/// edge, and both orientations of every longer cycle. Sorted by (length, vertices).
std::vector<SimpleCycle> enumerate_simple_cycles(const WeightedGraph& g);

/// Canonical rotation (minimal vertex first) of a cyclic vertex sequence.
std::vector<int> canonical_rotation(std::vector<int> cycle);

/// Cycles of a graph with index lookup by vertex sequence.
class CycleCatalog {
 public:
  explicit CycleCatalog(const WeightedGraph& g);

  const std::vector<SimpleCycle>& cycles() const { return cycles_; }
  const SimpleCycle& operator[](std::size_t i) const { return cycles_[i]; }
  std::size_t size() const { return cycles_.size(); }
  std::size_t vertex_count() const { return n_; }
  std::optional<int> index_of(const std::vector<int>& canonical) const;
  bool commute(int x, int y) const { return (cycles_[static_cast<std::size_t>(x)].mask & cycles_[static_cast<std::size_t>(y)].mask) == 0; }

  /// Weights of each cycle over T.
  template <class T>
  std::vector<T> weights(const linalg::Matrix<T>& a) const {
    std::vector<T> w;
    w.reserve(cycles_.size());
    for (const auto& c : cycles_) w.push_back(c.weight(a));
    return w;
  }

 private:
  std::size_t n_ = 0;
  std::vector<SimpleCycle> cycles_;
  std::map<std::vector<int>, int> index_;
};

/// c(u): total weight of the simple cycles whose vertex set is exactly u.
template <class T>
T cycle_weight_on(const CycleCatalog& catalog, const linalg::Matrix<T>& a, VertexMask u) {
  T total = T(0);
  for (const auto& c : catalog.cycles())
    if (c.mask == u) total += c.weight(a);
  return total;
}

}  // namespace jointspec::hikes
