#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "jointspec/jsm/measure.hpp"
#include "jointspec/linalg/dense.hpp"

namespace jointspec::jsm {

using linalg::Matrix;

/// Two evaluations of one identity.
template <class T>
struct Sides {
  T lhs;
  T rhs;
};

/// m[k] = det(A[k_1, ..., k_N]).
template <class T>
T generalized_moment(const Matrix<T>& a, const MultiIndex& k) {
  return linalg::determinant(linalg::column_mix(a, k));
}

/// Generalized moment with the exact value attached when A is integral.
struct Moment {
  double value = 0.0;
  std::optional<Rational> exact;
};

Moment generalized_moment(const linalg::SymmetricMatrix& a, const MultiIndex& k);

/// Multi-index with the given exponents placed at the vertices `u`.
MultiIndex embed(std::size_t n, std::span<const int> u, std::span<const unsigned> exponents);

struct MarginalReport {
  /// (A^k)_ii for k = 0..kmax.
  std::vector<double> expected;
  double max_deviation_determinant = 0.0;
  /// Deviation of the atom-sum route; nullopt when the measure was not built.
  std::optional<double> max_deviation_measure;
  bool exact = false;
};

/// Checks E(X_i^k) = (A^k)_ii on both moment routes.
MarginalReport marginal_check(const linalg::SymmetricMatrix& a, int i, unsigned kmax);

/// E(XX^T) - E(X)E(X)^T from first and second generalized moments.
template <class T>
Matrix<T> covariance_matrix(const Matrix<T>& a) {
  const std::size_t n = a.rows();
  std::vector<T> mean(n);
  for (std::size_t i = 0; i < n; ++i) mean[i] = generalized_moment(a, MultiIndex::unit(n, i));
  Matrix<T> cov(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      MultiIndex k = MultiIndex::zeros(n);
      k[i] += 1;
      k[j] += 1;
      cov(i, j) = generalized_moment(a, k) - mean[i] * mean[j];
    }
  return cov;
}

/// cov(X_i^k, X_j^k) for i != j.
template <class T>
T power_covariance(const Matrix<T>& a, int i, int j, unsigned k) {
  if (i == j) throw std::domain_error("power_covariance requires distinct vertices");
  const std::size_t n = a.rows();
  const auto ui = static_cast<std::size_t>(i);
  const auto uj = static_cast<std::size_t>(j);
  MultiIndex both = MultiIndex::zeros(n);
  both[ui] = k;
  both[uj] = k;
  return generalized_moment(a, both) -
         generalized_moment(a, MultiIndex::unit(n, ui, k)) * generalized_moment(a, MultiIndex::unit(n, uj, k));
}

/// f(x) = sum_k coeffs[k] x^k.
template <class T>
struct Polynomial {
  std::vector<T> coeffs;

  std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }

  T operator()(const T& x) const {
    T acc = T(0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Matrix<T> apply(const Matrix<T>& a) const {
    Matrix<T> acc(a.rows(), a.cols());
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
      acc = acc * a;
      for (std::size_t i = 0; i < a.rows(); ++i) acc(i, i) += *it;
    }
    return acc;
  }
};

/// E(prod_{i in u} f(X_i)) expanded by multilinearity into generalized moments.
template <class T>
T expected_product(const Matrix<T>& a, std::span<const int> u, const Polynomial<T>& f) {
  const std::size_t n = a.rows();
  const std::size_t p = u.size();
  if (p == 0) return T(1);
  const std::size_t terms = f.coeffs.size();
  if (terms == 0) return T(0);
  std::vector<unsigned> k(p, 0);
  T total = T(0);
  while (true) {
    T gamma = T(1);
    for (std::size_t j = 0; j < p && !is_zero(gamma); ++j) gamma *= f.coeffs[k[j]];
    if (!is_zero(gamma)) total += gamma * generalized_moment(a, embed(n, u, k));
    std::size_t pos = 0;
    while (pos < p && ++k[pos] == terms) k[pos++] = 0;
    if (pos == p) break;
  }
  return total;
}

/// det(f(A)_uu) against E(prod_{i in u} f(X_i)).
template <class T>
Sides<T> analytic_minor(const Matrix<T>& a, std::span<const int> u, const Polynomial<T>& f) {
  const Matrix<T> fa = f.apply(a);
  return {linalg::determinant(linalg::principal_submatrix(fa, u)), expected_product(a, u, f)};
}

/// tr(f(A)_uu) against E(sum_{i in u} f(X_i)).
template <class T>
Sides<T> trace_identity(const Matrix<T>& a, std::span<const int> u, const Polynomial<T>& f) {
  const Matrix<T> fa = f.apply(a);
  T lhs = T(0);
  for (int i : u) lhs += fa(static_cast<std::size_t>(i), static_cast<std::size_t>(i));
  T rhs = T(0);
  const std::size_t n = a.rows();
  for (int i : u)
    for (std::size_t k = 0; k < f.coeffs.size(); ++k)
      if (!is_zero(f.coeffs[k]))
        rhs += f.coeffs[k] * generalized_moment(a, MultiIndex::unit(n, static_cast<std::size_t>(i), static_cast<unsigned>(k)));
  return {lhs, rhs};
}

/// Ascending coefficients of z -> E(prod_{i in u}(z - f(X_i))) (lhs) and of
/// det(zI - f(A)_uu) (rhs, Faddeev-LeVerrier).
template <class T>
Sides<std::vector<T>> submatrix_charpoly(const Matrix<T>& a, std::span<const int> u, const Polynomial<T>& f) {
  const std::size_t p = u.size();
  std::vector<T> lhs(p + 1, T(0));
  for (std::size_t mask = 0; mask < (std::size_t{1} << p); ++mask) {
    std::vector<int> subset;
    for (std::size_t j = 0; j < p; ++j)
      if (mask & (std::size_t{1} << j)) subset.push_back(u[j]);
    T e = expected_product(a, std::span<const int>(subset), f);
    if (subset.size() % 2 == 1) e = -e;
    lhs[p - subset.size()] += e;
  }
  const Matrix<T> fa = f.apply(a);
  return {lhs, linalg::characteristic_polynomial(linalg::principal_submatrix(fa, u))};
}

/// E(prod_{i in u} f(X_i)) by summing over the atoms of a built measure.
double expected_product(const SignedMeasure& mu, std::span<const int> u, const Polynomial<double>& f);

}  // namespace jointspec::jsm
