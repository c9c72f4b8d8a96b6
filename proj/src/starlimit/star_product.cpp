#include "jointspec/starlimit/star_product.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "jointspec/hikes/generating.hpp"
#include "jointspec/linalg/dense.hpp"

namespace jointspec::starlimit {

namespace {

void check_merge_set(std::size_t n_vertices, std::span<const int> u) {
  if (u.empty()) throw std::domain_error("merge set must be nonempty");
  if (u.size() >= n_vertices) throw std::domain_error("merge set must be a proper subset of the vertices");
  std::vector<bool> seen(n_vertices, false);
  for (int v : u) {
    if (v < 0 || static_cast<std::size_t>(v) >= n_vertices)
      throw std::domain_error("merge vertex " + std::to_string(v + 1) + " out of range");
    if (seen[static_cast<std::size_t>(v)]) throw std::domain_error("merge vertex " + std::to_string(v + 1) + " repeated");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

template <class T>
T reduced_determinant(const linalg::Matrix<T>& a, std::span<const int> u, std::size_t n, const MultiIndex& k) {
  const std::size_t p = u.size();
  if (k.size() != p) throw std::invalid_argument("multi-index length must equal the merge-set size");
  const std::size_t degree = std::max<std::size_t>(k.max(), 1);
  const auto e = hikes::excursion_matrix(a, u, degree, T(static_cast<long>(n)));
  const auto r = (hikes::MatrixSeries<T>::identity(p, degree) - e).inverse();
  linalg::Matrix<T> m(p, p);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t row = 0; row < p; ++row) m(row, i) = r[k[i]](row, i);
  return linalg::determinant(m);
}

}  // namespace

StarProduct::StarProduct(WeightedGraph base, std::vector<int> merge_set, std::size_t copies)
    : base_(std::move(base)), u_(std::move(merge_set)), n_(copies) {
  check_merge_set(base_.size(), u_);
  if (n_ == 0) throw std::domain_error("star product needs at least one copy");
  rest_ = linalg::complement(u_, base_.size());
  position_.assign(base_.size(), -1);
  in_u_.assign(base_.size(), false);
  for (int v : u_) in_u_[static_cast<std::size_t>(v)] = true;
  for (std::size_t i = 0; i < u_.size(); ++i) position_[static_cast<std::size_t>(u_[i])] = static_cast<int>(i);
  for (std::size_t i = 0; i < rest_.size(); ++i) position_[static_cast<std::size_t>(rest_[i])] = static_cast<int>(i);
}

std::size_t StarProduct::index_of(int v, std::size_t c) const {
  const auto pos = static_cast<std::size_t>(position_[static_cast<std::size_t>(v)]);
  if (in_u_[static_cast<std::size_t>(v)]) return pos;
  return u_.size() + c * rest_.size() + pos;
}

const linalg::SymmetricMatrix& StarProduct::assembled() const {
  if (assembled_) return *assembled_;
  linalg::MatrixD m(dimension(), dimension());
  const std::size_t nv = base_.size();
  for (std::size_t c = 0; c < n_; ++c)
    for (std::size_t i = 0; i < nv; ++i)
      for (std::size_t j = 0; j < nv; ++j) {
        const double w = base_(i, j);
        if (w == 0.0) continue;
        // The shared (u,u) block is written once, from copy 0.
        if (in_u_[i] && in_u_[j] && c > 0) continue;
        m(index_of(static_cast<int>(i), c), index_of(static_cast<int>(j), c)) = w;
      }
  assembled_.emplace(m);
  return *assembled_;
}

StarProduct build_star_product(const WeightedGraph& g, std::vector<int> u, std::size_t n) {
  return StarProduct(g, std::move(u), n);
}

double scaled_moment(const StarProduct& sp, const MultiIndex& k) {
  if (k.size() != sp.p()) throw std::invalid_argument("multi-index length must equal the merge-set size");
  MultiIndex full = MultiIndex::zeros(sp.dimension());
  for (std::size_t i = 0; i < sp.p(); ++i) full[i] = k[i];
  const double det = linalg::determinant(linalg::column_mix(sp.assembled().dense(), full));
  return det / std::pow(static_cast<double>(sp.copies()), k.total() / 2.0);
}

ScaledMoment scaled_moment_reduced(const WeightedGraph& g, std::span<const int> u, std::size_t n, const MultiIndex& k) {
  check_merge_set(g.size(), u);
  if (n == 0) throw std::domain_error("star product needs at least one copy");
  ScaledMoment out;
  if (g.integral()) {
    const Rational det = reduced_determinant(g.matrix<Rational>(), u, n, k);
    out.exact_unscaled = det;
    out.unscaled = det.get_d();
  } else {
    out.unscaled = reduced_determinant(g.dense(), u, n, k);
  }
  out.value = out.unscaled / std::pow(static_cast<double>(n), k.total() / 2.0);
  return out;
}

linalg::MatrixD star_block_resolvent(const WeightedGraph& g, std::span<const int> u, std::size_t n, double z) {
  check_merge_set(g.size(), u);
  const linalg::MatrixD& a = g.dense();
  const std::vector<int> rest = linalg::complement(u, g.size());
  const std::span<const int> c(rest);
  const std::size_t p = u.size();
  const linalg::MatrixD inner = linalg::MatrixD::identity(rest.size()) - linalg::principal_submatrix(a, c) * z;
  const linalg::MatrixD inner_inv = linalg::inverse(inner, "I - z A_cc");
  const linalg::MatrixD excursion = linalg::submatrix(a, u, c) * inner_inv * linalg::submatrix(a, c, u);
  const linalg::MatrixD outer = linalg::MatrixD::identity(p) - linalg::principal_submatrix(a, u) * z -
                                excursion * (static_cast<double>(n) * z * z);
  return linalg::inverse(outer, "Schur complement of the merged block");
}

}  // namespace jointspec::starlimit
