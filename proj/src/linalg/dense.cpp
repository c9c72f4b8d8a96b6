#include "jointspec/linalg/dense.hpp"

namespace jointspec::linalg {

double determinant(const MatrixD& a) {
  if (!a.square()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = a.rows();
  MatrixD m = a;
  double det = 1.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    double best = std::fabs(m(col, col));
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::fabs(m(r, col)) > best) {
        best = std::fabs(m(r, col));
        pivot = r;
      }
    if (best == 0.0) return 0.0;
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(pivot, j), m(col, j));
      det = -det;
    }
    const double p = m(col, col);
    det *= p;
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = m(r, col) / p;
      if (f == 0.0) continue;
      for (std::size_t j = col + 1; j < n; ++j) m(r, j) -= f * m(col, j);
    }
  }
  return det;
}

Rational exact_determinant(const RationalMatrix& a) {
  if (!a.square()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return Rational(1);
  RationalMatrix m = a;
  Rational prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(m(k, k))) {
      std::size_t swap_row = n;
      for (std::size_t r = k + 1; r < n; ++r)
        if (!is_zero(m(r, k))) {
          swap_row = r;
          break;
        }
      if (swap_row == n) return Rational(0);
      for (std::size_t j = 0; j < n; ++j) std::swap(m(swap_row, j), m(k, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  Rational det = m(n - 1, n - 1);
  if (sign < 0) det = -det;
  return det;
}

int permutation_sign(std::span<const int> perm) {
  const std::size_t n = perm.size();
  std::vector<bool> seen(n, false);
  int sign = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

}  // namespace jointspec::linalg
