#include "jointspec/jsm/moments.hpp"

#include <algorithm>
#include <cmath>

namespace jointspec::jsm {

Moment generalized_moment(const linalg::SymmetricMatrix& a, const MultiIndex& k) {
  Moment m;
  m.value = generalized_moment(a.dense(), k);
  if (a.is_integral()) {
    m.exact = generalized_moment(a.exact(), k);
    m.value = m.exact->get_d();
  }
  return m;
}

MultiIndex embed(std::size_t n, std::span<const int> u, std::span<const unsigned> exponents) {
  if (u.size() != exponents.size()) throw std::invalid_argument("embed: subset and exponent lengths differ");
  MultiIndex k = MultiIndex::zeros(n);
  for (std::size_t j = 0; j < u.size(); ++j) k[static_cast<std::size_t>(u[j])] += exponents[j];
  return k;
}

MarginalReport marginal_check(const linalg::SymmetricMatrix& a, int i, unsigned kmax) {
  const std::size_t n = a.size();
  if (i < 0 || static_cast<std::size_t>(i) >= n) throw std::out_of_range("marginal_check: vertex out of range");
  const auto ui = static_cast<std::size_t>(i);
  MarginalReport report;
  report.exact = a.is_integral();

  std::optional<SignedMeasure> mu;
  if (n <= MeasureConfig{}.max_dimension) mu = build_measure(linalg::eigendecompose(a));
  double measure_dev = 0.0;

  for (unsigned k = 0; k <= kmax; ++k) {
    const MultiIndex idx = MultiIndex::unit(n, ui, k);
    if (report.exact) {
      const Rational expected = linalg::matrix_power(a.exact(), k)(ui, ui);
      const Rational det_route = generalized_moment(a.exact(), idx);
      report.expected.push_back(expected.get_d());
      report.max_deviation_determinant =
          std::max(report.max_deviation_determinant, abs_value(Rational(det_route - expected)));
    } else {
      const double expected = linalg::matrix_power(a.dense(), k)(ui, ui);
      report.expected.push_back(expected);
      report.max_deviation_determinant =
          std::max(report.max_deviation_determinant, std::fabs(generalized_moment(a.dense(), idx) - expected));
    }
    if (mu) measure_dev = std::max(measure_dev, std::fabs(moment_oracle(*mu, idx) - report.expected.back()));
  }
  if (mu) report.max_deviation_measure = measure_dev;
  return report;
}

double expected_product(const SignedMeasure& mu, std::span<const int> u, const Polynomial<double>& f) {
  double total = 0.0;
  for (const auto& atom : mu.atoms) {
    double term = atom.weight;
    for (int i : u) term *= f(atom.point[static_cast<std::size_t>(i)]);
    total += term;
  }
  return total;
}

}  // namespace jointspec::jsm
