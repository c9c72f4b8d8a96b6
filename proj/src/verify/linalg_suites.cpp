#include <cmath>

#include "jointspec/linalg/dense.hpp"
#include "jointspec/linalg/symmetric.hpp"
#include "jointspec/verify/families.hpp"
#include "jointspec/verify/suites.hpp"

namespace jointspec::verify {

namespace {

MultiIndex random_index(std::size_t n, unsigned max_component, Rng& rng) {
  MultiIndex k = MultiIndex::zeros(n);
  for (std::size_t i = 0; i < n; ++i) k[i] = static_cast<unsigned>(rng.uniform_int(0, max_component));
  return k;
}

}  // namespace

Suite det_float_suite() {
  Suite s;
  s.name = "det_float";
  s.module = "linalg";
  s.description = "float LU determinant of column_mix vs exact Bareiss determinant";
  s.default_trials = 100;
  s.family = [](const RunConfig& cfg, Rng& rng) { return random_integer_graphs(cfg.trials_or(100), 1, 6, -2, 2, rng); };
  s.applies = [](const WeightedGraph& g) { return g.integral(); };
  s.body = [](const WeightedGraph& g, SuiteRecorder& rec, const RunConfig& cfg, Rng& rng) {
    const linalg::RationalMatrix exact = g.matrix<Rational>();
    for (int t = 0; t < 10; ++t) {
      const MultiIndex k = random_index(g.size(), 4, rng);
      rec.detail("k=" + k.str());
      const linalg::MatrixD mixed = linalg::column_mix(g.dense(), k);
      const Rational det = linalg::exact_determinant(linalg::column_mix(exact, k));
      rec.close_relative("det(A[k]) float vs exact", linalg::determinant(mixed), det.get_d(), cfg.tol("det_float"));
    }
  };
  return s;
}

Suite eigen_suite() {
  Suite s;
  s.name = "eigen";
  s.module = "linalg";
  s.description = "Jacobi eigendecomposition: reconstruction, orthogonality, det(P) = +1, ascending order";
  s.default_trials = 60;
  s.family = [](const RunConfig& cfg, Rng& rng) {
    auto out = random_integer_graphs(cfg.trials_or(60) / 2, 1, 8, -3, 3, rng);
    for (std::size_t t = 0; t < cfg.trials_or(60) - cfg.trials_or(60) / 2; ++t) {
      const auto n = static_cast<std::size_t>(rng.uniform_int(1, 8));
      linalg::MatrixD m(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = rng.uniform(-1, 1);
      out.emplace_back(linalg::SymmetricMatrix(m), "random real #" + std::to_string(t + 1));
    }
    return out;
  };
  s.body = [](const WeightedGraph& g, SuiteRecorder& rec, const RunConfig& cfg, Rng&) {
    const linalg::EigenSystem eig = linalg::eigendecompose(g.weights());
    const std::size_t n = g.size();
    const linalg::MatrixD& p = eig.basis;
    linalg::MatrixD lam(n, n);
    for (std::size_t i = 0; i < n; ++i) lam(i, i) = eig.eigenvalues[i];
    const double scale = std::max(1.0, g.weights().frobenius());
    rec.close("||P L P^T - A||_F", linalg::frobenius_norm(p * lam * p.transpose() - g.dense()), 0.0,
              cfg.tol("eig_reconstruct") * scale);
    rec.close("max |P^T P - I|", linalg::max_abs_diff(p.transpose() * p, linalg::MatrixD::identity(n)), 0.0,
              cfg.tol("eig_orth"));
    rec.close("det P", linalg::determinant(p), 1.0, cfg.tol("eig_orth"));
    rec.close("max |AP - PL|", linalg::max_abs_diff(g.dense() * p, p * lam), 0.0, 1e-9 * scale);
    bool sorted = true;
    for (std::size_t i = 1; i < n; ++i) sorted = sorted && eig.eigenvalues[i - 1] <= eig.eigenvalues[i];
    rec.require("eigenvalues ascending", sorted);
  };
  return s;
}

Suite schur_suite() {
  Suite s;
  s.name = "schur_block";
  s.module = "linalg";
  s.description = "Schur-complement (u,u) block equals the block of the inverted resolvent";
  s.default_trials = 100;
  s.family = [](const RunConfig& cfg, Rng& rng) { return random_integer_graphs(cfg.trials_or(100), 2, 7, -2, 2, rng); };
  s.applies = [](const WeightedGraph& g) { return g.size() >= 2; };
  s.body = [](const WeightedGraph& g, SuiteRecorder& rec, const RunConfig& cfg, Rng& rng) {
    const std::vector<int> u = random_subset(g.size(), g.size() - 1, rng);
    const double fro = std::max(1.0, g.weights().frobenius());
    const double z = rng.uniform(-0.5, 0.5) / fro;
    rec.detail("u=" + subset_str(u) + " z=" + to_string(z));
    const linalg::MatrixD block = linalg::schur_block(g.dense(), u, z);
    const linalg::MatrixD full =
        linalg::inverse(linalg::MatrixD::identity(g.size()) - g.dense() * z, "I - zA");
    rec.close("schur block vs inverse", linalg::max_abs_diff(block, linalg::principal_submatrix(full, u)), 0.0,
              cfg.tol("schur"));
  };
  return s;
}

}  // namespace jointspec::verify
