#pragma once

#include <functional>
#include <span>
#include <vector>

#include "jointspec/jsm/moments.hpp"

namespace jointspec::jsm {

/// Partition of a ground set into disjoint nonempty blocks.
struct SetPartition {
  std::vector<std::vector<int>> blocks;
};

/// All partitions of `ground`, enumerated by restricted growth strings.
std::vector<SetPartition> set_partitions(std::span<const int> ground);

/// sum over partitions of weight(|pi|) prod_j block_value(pi_j).
template <class T>
T partition_sum(std::span<const int> ground, const std::function<T(std::size_t)>& partition_weight,
                const std::function<T(const std::vector<int>&)>& block_value) {
  T total = T(0);
  for (const auto& pi : set_partitions(ground)) {
    T term = partition_weight(pi.blocks.size());
    for (const auto& block : pi.blocks) {
      if (is_zero(term)) break;
      term *= block_value(block);
    }
    total += term;
  }
  return total;
}

/// Joint cumulant kappa(u) by Mobius inversion of E(prod_{i in B} X_i) = det(A_BB).
template <class T>
T cumulant(const Matrix<T>& a, std::span<const int> u) {
  if (u.empty()) throw std::invalid_argument("cumulant of an empty vertex set");
  return partition_sum<T>(
      u,
      [](std::size_t blocks) {
        // (-1)^{b-1} (b-1)!
        T w = T(1);
        for (std::size_t i = 1; i < blocks; ++i) w *= T(-static_cast<long>(i));
        return w;
      },
      [&](const std::vector<int>& block) { return linalg::determinant(linalg::principal_submatrix(a, std::span<const int>(block))); });
}

}  // namespace jointspec::jsm
