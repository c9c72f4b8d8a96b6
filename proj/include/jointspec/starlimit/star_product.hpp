#pragma once

#include <optional>
#include <vector>

#include "jointspec/graph.hpp"
#include "jointspec/hikes/series.hpp"
#include "jointspec/linalg/multi_index.hpp"

namespace jointspec::starlimit {

/// n copies of a base graph glued along the vertex subset u.
///
/// Vertex layout of the assembled matrix: the merged vertices u come first
/// (in the order given), then copy c occupies p + c(N-p) ... p + (c+1)(N-p) - 1,
/// listing the complement of u in increasing order.
class StarProduct {
 public:
  StarProduct(WeightedGraph base, std::vector<int> merge_set, std::size_t copies);

  const WeightedGraph& base() const { return base_; }
  const std::vector<int>& merge_set() const { return u_; }
  const std::vector<int>& rest() const { return rest_; }
  std::size_t copies() const { return n_; }
  std::size_t p() const { return u_.size(); }
  std::size_t dimension() const { return u_.size() + n_ * rest_.size(); }

  /// Builds (and caches) the full |p + n(N-p)| square weight matrix.
  const linalg::SymmetricMatrix& assembled() const;
  /// Assembled index of base vertex v in copy c.
  std::size_t index_of(int v, std::size_t c) const;

 private:
  WeightedGraph base_;
  std::vector<int> u_;
  std::vector<int> rest_;
  std::vector<int> position_;
  std::vector<bool> in_u_;
  std::size_t n_ = 1;
  mutable std::optional<linalg::SymmetricMatrix> assembled_;
};

/// Errors on an empty or full merge set, repeated vertices, or n = 0.
StarProduct build_star_product(const WeightedGraph& g, std::vector<int> u, std::size_t n);

/// n^{-|k|/2} det(A^(n)[k, 0, ..., 0]) on the assembled matrix (floating point).
double scaled_moment(const StarProduct& sp, const MultiIndex& k);

struct ScaledMoment {
  /// det(A^(n)[k, 0, ..., 0]) before scaling; exact when the base graph is integral.
  std::optional<Rational> exact_unscaled;
  double unscaled = 0.0;
  double value = 0.0;
};

/// Same quantity without assembling: the (u,u) block of the resolvent of G^(n)
/// is (I - z A_uu - n z^2 A_uc (I - z A_cc)^{-1} A_cu)^{-1}, whose coefficients
/// give the columns of powers restricted to u.
ScaledMoment scaled_moment_reduced(const WeightedGraph& g, std::span<const int> u, std::size_t n, const MultiIndex& k);

/// Closed-form (u,u) block of (I - z A^(n))^{-1} from the blocks of the base graph.
linalg::MatrixD star_block_resolvent(const WeightedGraph& g, std::span<const int> u, std::size_t n, double z);

}  // namespace jointspec::starlimit
