#pragma once

#include <optional>
#include <vector>

#include "jointspec/jsm/measure.hpp"
#include "jointspec/jsm/moments.hpp"
#include "jointspec/starlimit/star_product.hpp"

namespace jointspec::starlimit {

/// Limit of the rescaled merged coordinates: (B_i sqrt(Y_i)) with Y distributed
/// by the joint spectral measure of D = A_uc A_cu and B_i independent signs.
struct LimitLaw {
  std::vector<int> u;
  linalg::MatrixD d;
  /// D exactly, when the base graph is integral.
  std::optional<linalg::RationalMatrix> d_exact;
  linalg::EigenSystem d_eigen;
  /// Joint spectral measure of D.
  jsm::SignedMeasure y_measure;

  std::size_t p() const { return u.size(); }
  double min_eigenvalue() const { return d_eigen.eigenvalues.front(); }
  double max_eigenvalue() const { return d_eigen.eigenvalues.back(); }
};

/// u proper nonempty; |u| within the measure cap.
LimitLaw make_limit_law(const WeightedGraph& g, std::vector<int> u);

struct LimitMoment {
  double value = 0.0;
  std::optional<Rational> exact;
};

/// det(D[k/2]) when every k_i is even, 0 otherwise.
LimitMoment limit_moment(const LimitLaw& law, const MultiIndex& k);

struct ConvergenceRow {
  std::size_t n = 0;
  double scaled = 0.0;
  /// Assembled-matrix value, filled for n up to the direct limit.
  std::optional<double> direct;
  double limit = 0.0;
  double gap = 0.0;
  /// Whether the gap is exactly zero (known only on the exact route).
  std::optional<bool> gap_is_zero;
};

struct ConvergenceConfig {
  /// Rows up to this n are also evaluated on the assembled matrix.
  std::size_t direct_limit = 100;
  /// Leading rows exempt from the monotone-gap requirement.
  std::size_t burn_in = 1;
  double tol_final = 0.05;
  /// Relative agreement between assembled and reduced evaluations.
  double tol_direct = 1e-9;
  /// n values used for the log-log slope fit.
  std::vector<std::size_t> slope_grid{100, 1000, 10000};
  double max_slope = -0.4;
};

struct ConvergenceReport {
  std::vector<int> u;
  MultiIndex k;
  std::vector<ConvergenceRow> rows;
  std::optional<double> slope;
  bool monotone = true;
  bool final_ok = true;
  bool direct_ok = true;
  bool slope_ok = true;
  double max_direct_deviation = 0.0;

  bool pass() const { return monotone && final_ok && direct_ok && slope_ok; }
};

ConvergenceReport convergence_report(const WeightedGraph& g, std::vector<int> u, const MultiIndex& k,
                                     const std::vector<std::size_t>& n_list, const ConvergenceConfig& cfg = {});

struct ObataReport {
  int root = 0;
  /// sum_j a_{root j}^2 over j != root; the degree for simple graphs.
  double d_o = 0.0;
  std::vector<ConvergenceReport> moments;
  /// Limit moments equal d_o^{k/2} for even k and vanish for odd k.
  bool limit_ok = true;

  /// limit_ok and every even moment converges.
  bool pass() const;
};

ObataReport obata_special_case(const WeightedGraph& g, int root, const std::vector<std::size_t>& n_list,
                               unsigned kmax = 6, const ConvergenceConfig& cfg = {});

struct MgfCheck {
  jsm::Sides<double> sides;
  double tail_bound = 0.0;
};

class TruncationError : public std::domain_error {
 public:
  TruncationError(const std::string& what, double required_z) : std::domain_error(what), required_z_(required_z) {}
  double required_z() const { return required_z_; }

 private:
  double required_z_;
};

/// Bound on the dropped terms of both truncated expansions:
/// TV(mu_D) * sum_{m > L} C(m+p-1, p-1) q^m with q = max|z_i| sqrt(lambda_max(D)).
double mgf_tail_bound(const LimitLaw& law, std::span<const double> z, unsigned truncation);

/// E prod (1 - z_i B_i sqrt(Y_i))^{-1} against E prod (1 - z_i^2 Y_i)^{-1}, both
/// truncated at total degree L and averaged over the 2^p sign patterns.
/// Throws TruncationError when the tail bound exceeds max_tail.
MgfCheck rademacher_mgf_check(const LimitLaw& law, std::span<const double> z, unsigned truncation,
                              double max_tail = 1e-10);

/// Support-set form of ||X^(n)||^2 = ||A^(n)||_F^2 <= n ||A||_F^2.
struct NormBoundReport {
  double frobenius_sq = 0.0;
  double bound = 0.0;
  double max_atom_norm_sq = 0.0;
  /// max over atoms of | |x|^2 - ||A^(n)||_F^2 |.
  double max_atom_deviation = 0.0;
  bool pass(double tol) const { return frobenius_sq <= bound + tol && max_atom_deviation <= tol; }
};
/// Needs the assembled dimension within the measure cap.
NormBoundReport norm_bound_check(const StarProduct& sp);

}  // namespace jointspec::starlimit
