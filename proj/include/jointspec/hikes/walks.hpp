#pragma once

#include <functional>
#include <vector>

#include "jointspec/hikes/heaps.hpp"
#include "jointspec/hikes/series.hpp"

namespace jointspec::hikes {

template <class T>
std::vector<std::vector<int>> adjacency_lists(const Matrix<T>& a) {
  std::vector<std::vector<int>> adj(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!is_zero(a(i, j))) adj[i].push_back(static_cast<int>(j));
  return adj;
}

/// Calls visit(walk) for every walk of length 1..max_length starting at `start`
/// (walk lists vertices v_0..v_m). A walk is only extended past vertex v when
/// continue_through(v) holds; walks ending at v are still visited.
void for_each_walk(const std::vector<std::vector<int>>& adj, int start, std::size_t max_length,
                   const std::function<bool(int)>& continue_through,
                   const std::function<void(const std::vector<int>& walk)>& visit);

template <class T>
T walk_weight(const Matrix<T>& a, const std::vector<int>& walk) {
  T w = T(1);
  for (std::size_t t = 0; t + 1 < walk.size(); ++t)
    w *= a(static_cast<std::size_t>(walk[t]), static_cast<std::size_t>(walk[t + 1]));
  return w;
}

/// Loop-erasure projection of a closed walk onto its hike. Cycles are stacked
/// in the order they are closed, so the cycle through the start ends on top.
Hike project_walk(const CycleCatalog& catalog, const std::vector<int>& closed_walk);

/// Brute-force excursion generating matrix: entry (i,j) of coefficient k is the
/// total weight of length-k walks from u_i to u_j whose interior avoids u.
template <class T>
MatrixSeries<T> excursion_enumeration(const Matrix<T>& a, std::span<const int> u, std::size_t max_length) {
  const std::size_t p = u.size();
  MatrixSeries<T> e(p, p, max_length);
  const auto adj = adjacency_lists(a);
  std::vector<int> pos(a.rows(), -1);
  for (std::size_t j = 0; j < p; ++j) pos[static_cast<std::size_t>(u[j])] = static_cast<int>(j);
  for (std::size_t i = 0; i < p; ++i)
    for_each_walk(
        adj, u[i], max_length, [&](int v) { return pos[static_cast<std::size_t>(v)] < 0; },
        [&](const std::vector<int>& walk) {
          const int end = pos[static_cast<std::size_t>(walk.back())];
          if (end >= 0) e[walk.size() - 1](i, static_cast<std::size_t>(end)) += walk_weight(a, walk);
        });
  return e;
}

/// sum over closed walks i -> i of length k of weight / (visits to i after the start).
template <class T>
TruncatedSeries<T> closed_walk_visit_series(const Matrix<T>& a, int i, std::size_t max_length) {
  TruncatedSeries<T> s(max_length);
  const auto adj = adjacency_lists(a);
  for_each_walk(
      adj, i, max_length, [](int) { return true; },
      [&](const std::vector<int>& walk) {
        if (walk.back() != i) return;
        long visits = 0;
        for (std::size_t t = 1; t < walk.size(); ++t)
          if (walk[t] == i) ++visits;
        s[walk.size() - 1] += walk_weight(a, walk) / T(visits);
      });
  return s;
}

}  // namespace jointspec::hikes
