#include "jointspec/jsm/slater.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace jointspec::jsm {

namespace {

void require_simple(const linalg::EigenSystem& eig) {
  if (!eig.simple_spectrum())
    throw std::domain_error("operation requires distinct eigenvalues; the spectrum has repeated values");
}

void require_vertices(std::span<const int> idx, std::size_t n) {
  std::vector<int> sorted(idx.begin(), idx.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("index list contains duplicates");
  for (int i : sorted)
    if (i < 0 || static_cast<std::size_t>(i) >= n) throw std::out_of_range("index out of range");
}

}  // namespace

Sides<double> slater_probability(const linalg::EigenSystem& eig, const SignedMeasure& mu, std::span<const int> u,
                                 std::span<const int> v) {
  require_simple(eig);
  if (u.size() != v.size()) throw std::invalid_argument("slater_probability requires |u| = |v|");
  require_vertices(u, eig.size());
  require_vertices(v, eig.size());
  std::vector<int> target(v.begin(), v.end());
  std::sort(target.begin(), target.end());

  double atom_sum = 0.0;
  std::vector<int> values(u.size());
  for (const auto& atom : mu.atoms) {
    for (std::size_t j = 0; j < u.size(); ++j) values[j] = atom.classes[static_cast<std::size_t>(u[j])];
    std::sort(values.begin(), values.end());
    if (values == target) atom_sum += atom.weight;
  }
  const double minor = linalg::determinant(linalg::submatrix(eig.basis, u, v));
  return {atom_sum, minor * minor};
}

Sides<double> slater_probability(const linalg::EigenSystem& eig, std::span<const int> u, std::span<const int> v) {
  require_simple(eig);
  return slater_probability(eig, build_measure(eig), u, v);
}

Sides<double> multivariate_marginal(const linalg::EigenSystem& eig, const SignedMeasure& mu, std::span<const int> s,
                                    std::span<const int> t, std::span<const int> sigma) {
  require_simple(eig);
  const std::size_t k = s.size();
  if (t.size() != k || sigma.size() != k) throw std::invalid_argument("multivariate_marginal requires |s| = |t| = |sigma|");
  require_vertices(s, eig.size());
  require_vertices(t, eig.size());
  require_vertices(sigma, k);

  double atom_sum = 0.0;
  for (const auto& atom : mu.atoms) {
    bool hit = true;
    for (std::size_t j = 0; j < k && hit; ++j)
      hit = atom.classes[static_cast<std::size_t>(s[j])] == t[static_cast<std::size_t>(sigma[j])];
    if (hit) atom_sum += atom.weight;
  }
  double closed = static_cast<double>(linalg::permutation_sign(sigma)) * linalg::determinant(linalg::submatrix(eig.basis, s, t));
  for (std::size_t j = 0; j < k; ++j)
    closed *= eig.basis(static_cast<std::size_t>(s[j]), static_cast<std::size_t>(t[static_cast<std::size_t>(sigma[j])]));
  return {atom_sum, closed};
}

Sides<double> multivariate_marginal(const linalg::EigenSystem& eig, std::span<const int> s, std::span<const int> t,
                                    std::span<const int> sigma) {
  require_simple(eig);
  return multivariate_marginal(eig, build_measure(eig), s, t, sigma);
}

linalg::MatrixD random_class_rotation(const linalg::EigenSystem& eig, Rng& rng) {
  const std::size_t n = eig.size();
  linalg::MatrixD b = linalg::MatrixD::identity(n);
  for (const auto& cls : eig.classes) {
    const std::size_t m = cls.size();
    if (m < 2) continue;
    for (std::size_t r = 0; r < m * m; ++r) {
      const auto x = static_cast<std::size_t>(rng.uniform_int(0, static_cast<long long>(m) - 1));
      auto y = static_cast<std::size_t>(rng.uniform_int(0, static_cast<long long>(m) - 2));
      if (y >= x) ++y;
      const auto p = static_cast<std::size_t>(cls[x]);
      const auto q = static_cast<std::size_t>(cls[y]);
      const double angle = rng.uniform(0.0, 2.0 * std::numbers::pi);
      const double c = std::cos(angle);
      const double s = std::sin(angle);
      for (std::size_t i = 0; i < n; ++i) {
        const double bp = b(i, p);
        const double bq = b(i, q);
        b(i, p) = c * bp - s * bq;
        b(i, q) = s * bp + c * bq;
      }
    }
  }
  return b;
}

BasisIndependenceReport basis_independence_check(const linalg::SymmetricMatrix& a, int trials, std::uint64_t seed) {
  BasisIndependenceReport report;
  const linalg::EigenSystem eig = linalg::eigendecompose(a);
  if (eig.simple_spectrum()) {
    report.skipped = true;
    return report;
  }
  const SignedMeasure reference = build_measure(eig);
  for (int trial = 0; trial < trials; ++trial) {
    Rng rng = Rng::derive(seed, static_cast<std::uint64_t>(trial));
    const linalg::MatrixD rotated = eig.basis * random_class_rotation(eig, rng);
    const SignedMeasure mu = build_measure(linalg::with_basis(eig, rotated));
    report.max_deviation = std::max(report.max_deviation, max_weight_difference(reference, mu));
    ++report.trials;
  }
  return report;
}

}  // namespace jointspec::jsm
