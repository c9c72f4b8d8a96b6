#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "jointspec/linalg/dense.hpp"

namespace jointspec::hikes {

using linalg::Matrix;

/// Power series in z truncated at a fixed degree; arithmetic stays at that degree.
template <class T>
class TruncatedSeries {
 public:
  TruncatedSeries() = default;
  explicit TruncatedSeries(std::size_t degree) : c_(degree + 1, T(0)) {}
  TruncatedSeries(std::size_t degree, std::vector<T> coeffs) : c_(degree + 1, T(0)) {
    for (std::size_t k = 0; k < coeffs.size() && k <= degree; ++k) c_[k] = coeffs[k];
  }

  static TruncatedSeries constant(std::size_t degree, const T& value) {
    TruncatedSeries s(degree);
    s.c_[0] = value;
    return s;
  }

  std::size_t degree() const { return c_.size() - 1; }
  const T& operator[](std::size_t k) const { return c_[k]; }
  T& operator[](std::size_t k) { return c_[k]; }
  const std::vector<T>& coefficients() const { return c_; }

  TruncatedSeries& operator+=(const TruncatedSeries& o) {
    check(o);
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
    return *this;
  }
  TruncatedSeries& operator-=(const TruncatedSeries& o) {
    check(o);
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
    return *this;
  }
  TruncatedSeries& operator*=(const T& s) {
    for (auto& x : c_) x *= s;
    return *this;
  }

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(TruncatedSeries a, const T& s) { return a *= s; }
  friend TruncatedSeries operator-(TruncatedSeries a) { return a *= T(-1); }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.check(b);
    TruncatedSeries r(a.degree());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; i + j < a.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return r;
  }
  TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }

  /// Multiplicative inverse; requires a nonzero constant term.
  TruncatedSeries inverse() const {
    if (is_zero(c_[0])) throw std::domain_error("series inverse requires a nonzero constant term");
    TruncatedSeries r(degree());
    r.c_[0] = T(1) / c_[0];
    for (std::size_t k = 1; k < c_.size(); ++k) {
      T acc = T(0);
      for (std::size_t i = 1; i <= k; ++i) acc += c_[i] * r.c_[k - i];
      r.c_[k] = -acc * r.c_[0];
    }
    return r;
  }

  TruncatedSeries derivative() const {
    TruncatedSeries r(degree());
    for (std::size_t k = 1; k < c_.size(); ++k) r.c_[k - 1] = c_[k] * T(static_cast<long>(k));
    return r;
  }

  /// Formal logarithm; requires constant term 1. Integrates f'/f.
  TruncatedSeries log() const {
    if (c_[0] != T(1)) throw std::domain_error("series log requires constant term 1");
    const TruncatedSeries q = derivative() * inverse();
    TruncatedSeries r(degree());
    for (std::size_t k = 1; k < c_.size(); ++k) r.c_[k] = q.c_[k - 1] / T(static_cast<long>(k));
    return r;
  }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.c_ == b.c_; }

 private:
  void check(const TruncatedSeries& o) const {
    if (o.c_.size() != c_.size()) throw std::invalid_argument("series truncation degrees differ");
  }

  std::vector<T> c_;
};

/// Matrix-valued truncated series, stored as one coefficient matrix per degree.
template <class T>
class MatrixSeries {
 public:
  MatrixSeries() = default;
  MatrixSeries(std::size_t rows, std::size_t cols, std::size_t degree)
      : rows_(rows), cols_(cols), c_(degree + 1, Matrix<T>(rows, cols)) {}

  static MatrixSeries identity(std::size_t n, std::size_t degree) {
    MatrixSeries s(n, n, degree);
    s.c_[0] = Matrix<T>::identity(n);
    return s;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t degree() const { return c_.size() - 1; }
  const Matrix<T>& operator[](std::size_t k) const { return c_[k]; }
  Matrix<T>& operator[](std::size_t k) { return c_[k]; }

  TruncatedSeries<T> entry(std::size_t i, std::size_t j) const {
    TruncatedSeries<T> s(degree());
    for (std::size_t k = 0; k < c_.size(); ++k) s[k] = c_[k](i, j);
    return s;
  }

  MatrixSeries& operator+=(const MatrixSeries& o) {
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
    return *this;
  }
  MatrixSeries& operator-=(const MatrixSeries& o) {
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
    return *this;
  }
  friend MatrixSeries operator+(MatrixSeries a, const MatrixSeries& b) { return a += b; }
  friend MatrixSeries operator-(MatrixSeries a, const MatrixSeries& b) { return a -= b; }

  friend MatrixSeries operator*(const MatrixSeries& a, const MatrixSeries& b) {
    if (a.cols_ != b.rows_ || a.c_.size() != b.c_.size()) throw std::invalid_argument("matrix series shape mismatch");
    MatrixSeries r(a.rows_, b.cols_, a.degree());
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; i + j < a.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    return r;
  }

  /// Inverse; requires an invertible constant coefficient.
  MatrixSeries inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix series");
    MatrixSeries r(rows_, cols_, degree());
    r.c_[0] = linalg::inverse(c_[0], "constant coefficient of the matrix series");
    for (std::size_t k = 1; k < c_.size(); ++k) {
      Matrix<T> acc(rows_, cols_);
      for (std::size_t i = 1; i <= k; ++i) acc += c_[i] * r.c_[k - i];
      r.c_[k] = (r.c_[0] * acc) * T(-1);
    }
    return r;
  }

  TruncatedSeries<T> trace() const {
    TruncatedSeries<T> s(degree());
    for (std::size_t k = 0; k < c_.size(); ++k) s[k] = linalg::trace(c_[k]);
    return s;
  }

  /// Determinant by elimination over the series ring; pivots need a nonzero constant term.
  TruncatedSeries<T> determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix series");
    const std::size_t n = rows_;
    std::vector<std::vector<TruncatedSeries<T>>> m(n, std::vector<TruncatedSeries<T>>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m[i][j] = entry(i, j);
    TruncatedSeries<T> det = TruncatedSeries<T>::constant(degree(), T(1));
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t pivot = n;
      for (std::size_t r = col; r < n; ++r)
        if (!is_zero(m[r][col][0])) {
          pivot = r;
          break;
        }
      if (pivot == n) throw std::domain_error("matrix series determinant: no pivot with invertible constant term");
      if (pivot != col) {
        std::swap(m[pivot], m[col]);
        det = -det;
      }
      det *= m[col][col];
      const TruncatedSeries<T> inv = m[col][col].inverse();
      for (std::size_t r = col + 1; r < n; ++r) {
        const TruncatedSeries<T> f = m[r][col] * inv;
        for (std::size_t j = col; j < n; ++j) m[r][j] -= f * m[col][j];
      }
    }
    return det;
  }

  friend bool operator==(const MatrixSeries& a, const MatrixSeries& b) { return a.c_ == b.c_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Matrix<T>> c_;
};

}  // namespace jointspec::hikes
