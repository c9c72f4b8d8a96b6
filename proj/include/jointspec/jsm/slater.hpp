#pragma once

#include <span>
#include <vector>

#include "jointspec/jsm/moments.hpp"
#include "jointspec/random.hpp"

namespace jointspec::jsm {

/// P({X_i : i in u} = {lambda_j : j in v}) by atom summation (lhs) and det(P_uv)^2 (rhs).
/// Requires a simple spectrum.
Sides<double> slater_probability(const linalg::EigenSystem& eig, const SignedMeasure& mu, std::span<const int> u,
                                 std::span<const int> v);
Sides<double> slater_probability(const linalg::EigenSystem& eig, std::span<const int> u, std::span<const int> v);

/// P(X_{s_1} = lambda_{t_sigma(1)}, ..., X_{s_k} = lambda_{t_sigma(k)}) by atom summation (lhs)
/// and eps(sigma) det(P_st) prod_j p_{s_j t_sigma(j)} (rhs). `sigma` is 0-based one-line notation.
Sides<double> multivariate_marginal(const linalg::EigenSystem& eig, const SignedMeasure& mu, std::span<const int> s,
                                    std::span<const int> t, std::span<const int> sigma);
Sides<double> multivariate_marginal(const linalg::EigenSystem& eig, std::span<const int> s, std::span<const int> t,
                                    std::span<const int> sigma);

struct BasisIndependenceReport {
  bool skipped = false;
  int trials = 0;
  double max_deviation = 0.0;
};

/// Block-diagonal rotation with det +1 acting inside each eigenvalue class,
/// built as a product of random Givens rotations.
linalg::MatrixD random_class_rotation(const linalg::EigenSystem& eig, Rng& rng);

/// Rebuilds the measure under random in-class basis rotations and compares atoms.
BasisIndependenceReport basis_independence_check(const linalg::SymmetricMatrix& a, int trials, std::uint64_t seed);

/// ((MB) o C, (M o C) B) where o is the Hadamard product.
template <class T>
Sides<Matrix<T>> hadamard_lemma(const Matrix<T>& m, const Matrix<T>& b, const Matrix<T>& c) {
  auto hadamard = [](Matrix<T> x, const Matrix<T>& y) {
    for (std::size_t i = 0; i < x.rows(); ++i)
      for (std::size_t j = 0; j < x.cols(); ++j) x(i, j) *= y(i, j);
    return x;
  };
  return {hadamard(m * b, c), hadamard(m, c) * b};
}

}  // namespace jointspec::jsm
