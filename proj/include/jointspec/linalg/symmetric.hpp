#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "jointspec/linalg/dense.hpp"

namespace jointspec::linalg {

/// Real symmetric matrix. Symmetry is established once, at construction.
class SymmetricMatrix {
 public:
  SymmetricMatrix() = default;

  /// Requires |m_ij - m_ji| <= tol; the stored matrix is the symmetrized average.
  explicit SymmetricMatrix(const MatrixD& m, double tol = 0.0);

  static SymmetricMatrix zeros(std::size_t n) { return SymmetricMatrix(MatrixD(n, n)); }

  std::size_t size() const { return m_.rows(); }
  double operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  const MatrixD& dense() const { return m_; }

  /// True when every entry is an integer, enabling the exact route.
  bool is_integral() const { return integral_; }
  RationalMatrix exact() const { return to_rational(m_); }

  double frobenius() const { return frobenius_norm(m_); }

  friend bool operator==(const SymmetricMatrix& a, const SymmetricMatrix& b) { return a.m_ == b.m_; }

 private:
  MatrixD m_;
  bool integral_ = true;
};

struct EigenConfig {
  int max_sweeps = 100;
  /// Relative tolerance for grouping equal eigenvalues.
  double class_tolerance = 1e-8;
};

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A = P diag(lambda) P^T with lambda ascending and det(P) = +1.
struct EigenSystem {
  std::vector<double> eigenvalues;
  MatrixD basis;
  /// Runs of indices whose eigenvalues coincide under the class tolerance.
  std::vector<std::vector<int>> classes;
  std::vector<int> class_of;

  std::size_t size() const { return eigenvalues.size(); }
  bool simple_spectrum() const { return classes.size() == eigenvalues.size(); }
  /// Mean eigenvalue of class c.
  double class_value(int c) const;
};

/// Cyclic Jacobi diagonalization. Throws ConvergenceError after the sweep budget.
EigenSystem eigendecompose(const SymmetricMatrix& a, const EigenConfig& cfg = {});

/// Re-derive eigenvalue classes for the given sorted eigenvalues.
std::vector<std::vector<int>> eigenvalue_classes(const std::vector<double>& sorted, double scale, double tol);

/// Assembles an EigenSystem from an explicit basis (used to rotate inside classes).
EigenSystem with_basis(const EigenSystem& eig, MatrixD basis);

/// (u,u) block of (I - zA)^{-1} through the Schur complement of the complementary block.
MatrixD schur_block(const MatrixD& a, std::span<const int> u, double z);

/// Complement of `u` in {0..n-1}, ascending.
std::vector<int> complement(std::span<const int> u, std::size_t n);

}  // namespace jointspec::linalg
