#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "jointspec/linalg/matrix.hpp"
#include "jointspec/linalg/multi_index.hpp"

namespace jointspec::linalg {

class SingularMatrixError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Determinant by LU with partial pivoting.
double determinant(const MatrixD& a);

/// Exact determinant by fraction-free (Bareiss) elimination.
Rational exact_determinant(const RationalMatrix& m);

inline Rational determinant(const RationalMatrix& m) { return exact_determinant(m); }

/// Signature of a permutation given in one-line notation.
int permutation_sign(std::span<const int> perm);

/// Leibniz expansion over S_n. Exponential; only for small oracle checks.
template <class T>
T leibniz_determinant(const Matrix<T>& a) {
  if (!a.square()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = a.rows();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  T total = T(0);
  do {
    T term = T(permutation_sign(perm));
    for (std::size_t i = 0; i < n && !is_zero(term); ++i) term *= a(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Gauss-Jordan inverse. Throws SingularMatrixError naming `what` on failure.
template <class T>
Matrix<T> inverse(const Matrix<T>& a, const std::string& what = "matrix") {
  if (!a.square()) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = a.rows();
  Matrix<T> m = a;
  Matrix<T> inv = Matrix<T>::identity(n);
  double scale = 0.0;
  if constexpr (std::is_same_v<T, double>) {
    for (double x : a.data()) scale = std::max(scale, std::fabs(x));
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = n;
    if constexpr (std::is_same_v<T, double>) {
      double best = 0.0;
      for (std::size_t r = col; r < n; ++r)
        if (std::fabs(m(r, col)) > best) {
          best = std::fabs(m(r, col));
          pivot = r;
        }
      if (pivot == n || best <= 1e-13 * std::max(1.0, scale)) pivot = n;
    } else {
      for (std::size_t r = col; r < n; ++r)
        if (!is_zero(m(r, col))) {
          pivot = r;
          break;
        }
    }
    if (pivot == n) throw SingularMatrixError(what + " is singular");
    if (pivot != col)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m(pivot, j), m(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    const T p = m(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      m(col, j) /= p;
      inv(col, j) /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || is_zero(m(r, col))) continue;
      const T f = m(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        m(r, j) -= f * m(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

/// A^k by repeated squaring, A^0 = I.
template <class T>
Matrix<T> matrix_power(const Matrix<T>& a, unsigned k) {
  if (!a.square()) throw std::invalid_argument("power of non-square matrix");
  Matrix<T> result = Matrix<T>::identity(a.rows());
  Matrix<T> base = a;
  while (k > 0) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k > 0) base = base * base;
  }
  return result;
}

/// The matrix whose i-th column is the i-th column of A^{k_i}.
template <class T>
Matrix<T> column_mix(const Matrix<T>& a, const MultiIndex& k) {
  if (!a.square() || k.size() != a.rows()) throw std::invalid_argument("column_mix: multi-index length must equal dimension");
  const std::size_t n = a.rows();
  Matrix<T> out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<T> v(n, T(0));
    v[i] = T(1);
    for (unsigned step = 0; step < k[i]; ++step) v = multiply(a, std::span<const T>(v));
    out.set_column(i, v);
  }
  return out;
}

/// Coefficients (ascending) of det(xI - A) by the Faddeev-LeVerrier recursion.
template <class T>
std::vector<T> characteristic_polynomial(const Matrix<T>& a) {
  if (!a.square()) throw std::invalid_argument("characteristic polynomial of non-square matrix");
  const std::size_t n = a.rows();
  std::vector<T> c(n + 1, T(0));
  c[n] = T(1);
  Matrix<T> m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m;
    for (std::size_t i = 0; i < n; ++i) m(i, i) += c[n - k + 1];
    Matrix<T> am = a * m;
    c[n - k] = -trace(am) / T(static_cast<long>(k));
  }
  return c;
}

}  // namespace jointspec::linalg
