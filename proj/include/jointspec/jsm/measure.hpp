#pragma once

#include <cstddef>
#include <vector>

#include "jointspec/linalg/multi_index.hpp"
#include "jointspec/linalg/symmetric.hpp"

namespace jointspec::jsm {

/// One support point lambda_sigma of the joint spectral measure.
struct Atom {
  /// Coordinates, each a (class-mean) eigenvalue.
  std::vector<double> point;
  /// Eigenvalue-class index of each coordinate; this is the atom's identity.
  std::vector<int> classes;
  double weight = 0.0;
};

/// Finite signed measure of total mass one, atoms sorted by class tuple.
struct SignedMeasure {
  std::vector<Atom> atoms;
  std::size_t dimension = 0;

  double total_mass() const;
  /// Total variation sum |w|.
  double total_variation() const;
  const Atom* find(const std::vector<int>& classes) const;
};

struct MeasureConfig {
  /// The construction sums over S_N.
  std::size_t max_dimension = 9;
};

/// Pushes the signed permutation measure eps(tau) prod_j p_{j tau(j)} forward to
/// permuted eigenvalue vectors, grouping tau by eigenvalue class.
SignedMeasure build_measure(const linalg::EigenSystem& eig, const MeasureConfig& cfg = {});

/// Definitional integral sum_atoms w prod x_i^{k_i}.
double moment_oracle(const SignedMeasure& measure, const MultiIndex& k);

/// sum_atoms |w| prod |x_i|^{k_i}; the natural error scale of moment_oracle.
double moment_magnitude(const SignedMeasure& measure, const MultiIndex& k);

/// Largest weight difference over the union of supports.
double max_weight_difference(const SignedMeasure& a, const SignedMeasure& b);

}  // namespace jointspec::jsm
