#include <algorithm>
#include <cmath>

#include "jointspec/hikes/cycles.hpp"
#include "jointspec/jsm/measure.hpp"
#include "jointspec/jsm/moments.hpp"
#include "jointspec/jsm/partitions.hpp"
#include "jointspec/jsm/slater.hpp"
#include "jointspec/verify/families.hpp"
#include "jointspec/verify/suites.hpp"

namespace jointspec::verify {

namespace {

MultiIndex random_index(std::size_t n, unsigned max_component, Rng& rng) {
  MultiIndex k = MultiIndex::zeros(n);
  for (std::size_t i = 0; i < n; ++i) k[i] = static_cast<unsigned>(rng.uniform_int(0, max_component));
  return k;
}

bool loopless_simple(const WeightedGraph& g) { return g.simple(); }

/// Random integer symmetric matrices whose spectrum is simple.
std::vector<WeightedGraph> simple_spectrum_graphs(std::size_t count, Rng& rng) {
  std::vector<WeightedGraph> out;
  while (out.size() < count) {
    const auto n = static_cast<std::size_t>(rng.uniform_int(2, 6));
    linalg::SymmetricMatrix a = graphs::random_integer_symmetric(n, -2, 2, rng);
    const linalg::EigenSystem eig = linalg::eigendecompose(a);
    bool separated = eig.simple_spectrum();
    for (std::size_t i = 1; i < n && separated; ++i)
      separated = eig.eigenvalues[i] - eig.eigenvalues[i - 1] > 1e-4 * std::max(1.0, a.frobenius());
    if (separated) out.emplace_back(a, "simple spectrum #" + std::to_string(out.size() + 1));
  }
  return out;
}

}  // namespace

Suite moment_oracle_suite() {
  Suite s;
  s.name = "moment_oracle";
  s.module = "jsm";
  s.description = "generalized moments: permutation sum over the measure vs det(A[k]) (exact and float)";
  s.default_trials = 200;
  s.family = [](const RunConfig& cfg, Rng& rng) { return random_integer_graphs(cfg.trials_or(200), 1, 6, -2, 2, rng); };
  s.applies = [](const WeightedGraph& g) { return g.size() <= 9; };
  s.body = [](const WeightedGraph& g, SuiteRecorder& rec, const RunConfig& cfg, Rng& rng) {
    const jsm::SignedMeasure mu = jsm::build_measure(linalg::eigendecompose(g.weights()));
    const bool exact_route = g.integral();
    const linalg::RationalMatrix a = exact_route ? g.matrix<Rational>() : linalg::RationalMatrix();
    for (int t = 0; t < 20; ++t) {
      const MultiIndex k = random_index(g.size(), 4, rng);
      rec.detail("k=" + k.str());
      double reference = 0.0;
      if (exact_route) {
        const linalg::RationalMatrix mixed = linalg::column_mix(a, k);
        const Rational bareiss = linalg::exact_determinant(mixed);
        rec.exact("permutation expansion of det(A[k]) vs Bareiss", linalg::leibniz_determinant(mixed), bareiss);
        reference = bareiss.get_d();
      } else {
        reference = jsm::generalized_moment(g.dense(), k);
      }
      // Float error of the atom sum scales with sum |w| prod |x|^k, not with the result.
      const double scale = std::max(1.0, jsm::moment_magnitude(mu, k));
      rec.close("measure moment vs det(A[k])", jsm::moment_oracle(mu, k), reference, cfg.tol("moment_float") * scale);
    }
  };
  return s;
}

Suite measure_suite() {
  Suite s;
  s.name = "measure";
  s.module = "jsm";
  s.description = "joint spectral measure: total mass one, atoms are permutations of the spectrum";
  s.default_trials = 60;
  s.family = [](const RunConfig& cfg, Rng& rng) {
    auto out = random_integer_graphs(cfg.trials_or(60) / 2, 1, 7, -2, 2, rng);
    auto more = random_simple_graphs(cfg.trials_or(60) - out.size(), 2, 7, rng);
    out.insert(out.end(), more.begin(), more.end());
    return out;
  };
  s.applies = [](const WeightedGraph& g) { return g.size() <= 9; };
  s.body = [](const WeightedGraph& g, SuiteRecorder& rec, const RunConfig& cfg, Rng&) {
    const linalg::EigenSystem eig = linalg::eigendecompose(g.weights());
    const jsm::SignedMeasure mu = jsm::build_measure(eig);
    rec.close("total mass", mu.total_mass(), 1.0, cfg.tol("mass"));
    std::vector<int> classes_sorted(eig.class_of);
    std::sort(classes_sorted.begin(), classes_sorted.end());
    bool permutations = true;
    for (const auto& atom : mu.atoms) {
      std::vector<int> c = atom.classes;
      std::sort(c.begin(), c.end());
      permutations = permutations && c == classes_sorted;
      for (std::size_t i = 0; i < atom.point.size(); ++i)
        permutations = permutations && atom.point[i] == eig.class_value(atom.classes[i]);
    }
    rec.require("atoms are permuted eigenvalue vectors", permutations);
  };
  return s;
}

Suite marginal_suite() {
  Suite s;
  s.name = "marginals";
  s.module = "jsm";
  s.description = "E(X_i^k) = (A^k)_ii on the determinant and atom routes";
  s.default_trials = 40;
  s.family = [](const RunConfig& cfg, Rng& rng) { return random_integer_graphs(cfg.trials_or(40), 1, 7, -2, 2, rng); };
  s.body = [](const WeightedGraph& g, SuiteRecorder& rec, const RunConfig& cfg, Rng&) {
    for (std::size_t i = 0; i < g.size(); ++i) {
      rec.detail("i=" + std::to_string(i + 1));
      const jsm::MarginalReport r = jsm::marginal_check(g.weights(), static_cast<int>(i), 6);
      double scale = 1.0;
      for (double e : r.expected) scale = std::max(scale, std::fabs(e));
      rec.close("determinant route", r.max_deviation_determinant, 0.0, r.exact ? 0.0 : cfg.tol("marginal") * scale);
      if (r.max_deviation_measure) rec.close("atom route", *r.max_deviation_measure, 0.0, cfg.tol("marginal") * scale);
    }
  };
  return s;
}

Suite laplacian_suite() {
  Suite s;
  s.name = "laplacian";
  s.module = "jsm";
  s.description = "covariance matrix of the measure equals the graph Laplacian (exact)";
  s.default_trials = 50;
  s.family = [](const RunConfig& cfg, Rng& rng) { return random_simple_graphs(cfg.trials_or(50), 1, 8, rng); };
  s.applies = loopless_simple;
  s.body = [](const WeightedGraph& g, SuiteRecorder& rec, const RunConfig&, Rng&) {
    const linalg::RationalMatrix cov = jsm::covariance_matrix(g.matrix<Rational>());
    const linalg::RationalMatrix lap = linalg::to_rational(g.laplacian());
    for (std::size_t i = 0; i < g.size(); ++i)
      for (std::size_t j = 0; j < g.size(); ++j) {
        rec.detail("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
        rec.exact("cov = L", cov(i, j), lap(i, j));
      }
  };
  return s;
}

Suite power_covariance_suite() {
  Suite s;
  s.name = "power_covariance";
  s.module = "jsm";
  s.description = "cov(X_i^k, X_j^k) = -((A^k)_ij)^2 for i != j, k <= 5 (exact)";
  s.default_trials = 50;
  s.family = [](const RunConfig& cfg, Rng& rng) { return random_simple_graphs(cfg.trials_or(50), 1, 8, rng); };
  s.applies = [](const WeightedGraph& g) { return g.integral(); };
  s.body = [](const WeightedGraph& g, SuiteRecorder& rec, const RunConfig&, Rng&) {
    const linalg::RationalMatrix a = g.matrix<Rational>();
    for (unsigned k = 0; k <= 5; ++k) {
      const linalg::RationalMatrix ak = linalg::matrix_power(a, k);
      for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j) {
          if (i == j) continue;
          rec.detail("i=" + std::to_string(i + 1) + " j=" + std::to_string(j + 1) + " k=" + std::to_string(k));
          rec.exact("power covariance", jsm::power_covariance(a, static_cast<int>(i), static_cast<int>(j), k),
                    -ak(i, j) * ak(i, j));
        }
    }
  };
  return s;
}

Suite cumulant_suite() {
  Suite s;
  s.name = "cumulants";
  s.module = "jsm";
  s.description = "kappa(u) = (-1)^{|u|-1} c(u) and det(-A_uu) as a partition sum over c (exact)";
  s.default_trials = 30;
  s.family = [](const RunConfig& cfg, Rng& rng) {
    auto out = random_integer_graphs(cfg.trials_or(30) / 2, 1, 6, -2, 2, rng);
    auto more = random_simple_graphs(cfg.trials_or(30) - out.size(), 2, 6, rng);
    out.insert(out.end(), more.begin(), more.end());
    return out;
  };
  s.applies = [](const WeightedGraph& g) { return g.integral() && g.size() <= 12; };
  s.body = [](const WeightedGraph& g, SuiteRecorder& rec, const RunConfig&, Rng&) {
    const linalg::RationalMatrix a = g.matrix<Rational>();
    const hikes::CycleCatalog catalog(g);
    auto c = [&](const std::vector<int>& block) {
      return hikes::cycle_weight_on(catalog, a, hikes::mask_of(block));
    };
    for (const auto& u : nonempty_subsets(g.size())) {
      if (u.size() > 4) continue;
      rec.detail("u=" + subset_str(u));
      const Rational sign = u.size() % 2 == 1 ? Rational(1) : Rational(-1);
      rec.exact("kappa(u) = (-1)^{|u|-1} c(u)", jsm::cumulant(a, std::span<const int>(u)), sign * c(u));
      linalg::RationalMatrix minus = linalg::principal_submatrix(a, std::span<const int>(u));
      minus *= Rational(-1);
      const Rational partition = jsm::partition_sum<Rational>(
          u, [](std::size_t blocks) { return blocks % 2 == 0 ? Rational(1) : Rational(-1); }, c);
      rec.exact("det(-A_uu) = sum_pi (-1)^|pi| prod c", linalg::exact_determinant(minus), partition);
    }
  };
  return s;
}

Suite analytic_minor_suite() {
  Suite s;
  s.name = "analytic_minor";
  s.module = "jsm";
  s.description = "det(f(A)_uu), tr(f(A)_uu) and det(zI - f(A)_uu) against measure expectations";
  s.default_trials = 100;
  s.family = [](const RunConfig& cfg, Rng& rng) {
    auto out = random_integer_graphs(cfg.trials_or(100) / 2, 1, 6, -2, 2, rng);
    auto more = random_simple_graphs(cfg.trials_or(100) - out.size(), 1, 6, rng);
    out.insert(out.end(), more.begin(), more.end());
    return out;
  };
  s.applies = [](const WeightedGraph& g) { return g.size() <= 9; };
  s.body = [](const WeightedGraph& g, SuiteRecorder& rec, const RunConfig& cfg, Rng& rng) {
    const std::vector<int> u = random_subset(g.size(), g.size(), rng);
    const auto degree = static_cast<std::size_t>(rng.uniform_int(0, 4));
    jsm::Polynomial<Rational> fq;
    jsm::Polynomial<double> fd;
    for (std::size_t d = 0; d <= degree; ++d) {
      fq.coeffs.emplace_back(static_cast<long>(rng.uniform_int(-3, 3)));
      fd.coeffs.push_back(rng.uniform(-1, 1));
    }
    std::string poly;
    for (std::size_t d = 0; d <= degree; ++d) poly += (d ? "," : "") + fq.coeffs[d].get_str();
    rec.detail("u=" + subset_str(u) + " integer coefficients [" + poly + "]");

    if (g.integral()) {
      const linalg::RationalMatrix a = g.matrix<Rational>();
      const auto minor = jsm::analytic_minor(a, std::span<const int>(u), fq);
      rec.exact("det(f(A)_uu) = E prod f(X_i)", minor.lhs, minor.rhs);
      const auto tr = jsm::trace_identity(a, std::span<const int>(u), fq);
      rec.exact("tr(f(A)_uu) = E sum f(X_i)", tr.lhs, tr.rhs);
      const auto cp = jsm::submatrix_charpoly(a, std::span<const int>(u), fq);
      for (std::size_t j = 0; j < cp.lhs.size(); ++j)
        rec.exact("charpoly coefficient " + std::to_string(j), cp.lhs[j], cp.rhs[j]);
    }

    std::string real_poly;
    for (std::size_t d = 0; d <= degree; ++d) real_poly += (d ? "," : "") + to_string(fd.coeffs[d]);
    rec.detail("u=" + subset_str(u) + " real coefficients [" + real_poly + "]");
    const jsm::SignedMeasure mu = jsm::build_measure(linalg::eigendecompose(g.weights()));
    const linalg::MatrixD fa = fd.apply(g.dense());
    const double det = linalg::determinant(linalg::principal_submatrix(fa, std::span<const int>(u)));
    double trace = 0.0;
    for (int i : u) trace += fa(static_cast<std::size_t>(i), static_cast<std::size_t>(i));
    double expected_trace = 0.0, magnitude = 0.0, trace_magnitude = 0.0;
    for (const auto& atom : mu.atoms) {
      double prod = 1.0, sum = 0.0, abs_sum = 0.0;
      for (int i : u) {
        const double fx = fd(atom.point[static_cast<std::size_t>(i)]);
        prod *= std::fabs(fx);
        sum += fx;
        abs_sum += std::fabs(fx);
      }
      magnitude += std::fabs(atom.weight) * prod;
      expected_trace += atom.weight * sum;
      trace_magnitude += std::fabs(atom.weight) * abs_sum;
    }
    const double tol = cfg.tol("minor_float");
    rec.close("float det(f(A)_uu) vs atom sum", det, jsm::expected_product(mu, std::span<const int>(u), fd),
              tol * std::max(1.0, magnitude));
    rec.close("float det(f(A)_uu) vs moment expansion", det, jsm::expected_product(g.dense(), std::span<const int>(u), fd),
              tol * std::max(1.0, magnitude));
    rec.close("float tr(f(A)_uu) vs atom sum", trace, expected_trace, tol * std::max(1.0, trace_magnitude));
  };
  return s;
}

Suite slater_suite() {
  Suite s;
  s.name = "slater";
  s.module = "jsm";
  s.description = "Slater probabilities det(P_uv)^2 and multivariate marginals on simple spectra";
  s.default_trials = 20;
  s.family = [](const RunConfig& cfg, Rng& rng) { return simple_spectrum_graphs(cfg.trials_or(20), rng); };
  s.applies = [](const WeightedGraph& g) {
    return g.size() <= 9 && linalg::eigendecompose(g.weights()).simple_spectrum();
  };
  s.body = [](const WeightedGraph& g, SuiteRecorder& rec, const RunConfig& cfg, Rng& rng) {
    const linalg::EigenSystem eig = linalg::eigendecompose(g.weights());
    const jsm::SignedMeasure mu = jsm::build_measure(eig);
    const double tol = cfg.tol("slater");
    const std::size_t n = g.size();
    for (std::size_t size = 1; size <= std::min<std::size_t>(3, n); ++size) {
      const auto sets = subsets_of_size(n, size);
      for (const auto& u : sets) {
        double total = 0.0;
        for (const auto& v : sets) {
          rec.detail("u=" + subset_str(u) + " v=" + subset_str(v));
          const auto sides = jsm::slater_probability(eig, mu, u, v);
          rec.close("P(X_u = lambda_v) = det(P_uv)^2", sides.lhs, sides.rhs, tol);
          total += sides.lhs;
        }
        rec.detail("u=" + subset_str(u));
        rec.close("sum over v", total, 1.0, tol);
      }
    }
    for (int t = 0; t < 10; ++t) {
      const std::vector<int> sv = random_subset(n, n, rng);
      const std::vector<int> tv = random_subset(n, sv.size(), rng);
      if (tv.size() != sv.size()) continue;
      std::vector<int> sigma(sv.size());
      for (std::size_t i = 0; i < sigma.size(); ++i) sigma[i] = static_cast<int>(i);
      for (std::size_t i = sigma.size(); i > 1; --i)
        std::swap(sigma[i - 1], sigma[static_cast<std::size_t>(rng.uniform_int(0, static_cast<long long>(i - 1)))]);
      rec.detail("s=" + subset_str(sv) + " t=" + subset_str(tv));
      const auto sides = jsm::multivariate_marginal(eig, mu, sv, tv, sigma);
      rec.close("multivariate marginal", sides.lhs, sides.rhs, tol);
    }
  };
  return s;
}

Suite basis_independence_suite() {
  Suite s;
  s.name = "basis_independence";
  s.module = "jsm";
  s.description = "measure atoms unchanged under random in-class eigenbasis rotations";
  s.default_trials = 10;
  s.family = [](const RunConfig& cfg, Rng& rng) {
    std::vector<WeightedGraph> out{graphs::star(3)};
    for (std::size_t t = 0; t < cfg.trials_or(10); ++t) {
      const auto n = static_cast<std::size_t>(rng.uniform_int(3, 4));
      WeightedGraph g = graphs::gnp(n, rng.uniform(0.4, 0.9), rng);
      const WeightedGraph doubled = graphs::disjoint_union(g, g);
      out.emplace_back(doubled.weights(), "G+G #" + std::to_string(t + 1));
    }
    return out;
  };
  s.applies = [](const WeightedGraph& g) {
    return g.size() <= 9 && !linalg::eigendecompose(g.weights()).simple_spectrum();
  };
  s.body = [](const WeightedGraph& g, SuiteRecorder& rec, const RunConfig& cfg, Rng& rng) {
    const jsm::BasisIndependenceReport r = jsm::basis_independence_check(g.weights(), 20, rng.next());
    rec.require("spectrum has a repeated eigenvalue", !r.skipped);
    rec.close("max atom weight change over 20 rotations", r.max_deviation, 0.0, cfg.tol("basis"));
  };
  return s;
}

Suite hadamard_suite() {
  Suite s;
  s.name = "hadamard";
  s.accepts_graph = false;
  s.module = "jsm";
  s.description = "(MB) o C = (M o C) B for block-diagonal C and B supported in C (exact)";
  s.default_trials = 100;
  s.family = [](const RunConfig& cfg, Rng& rng) {
    std::vector<WeightedGraph> out;
    for (std::size_t t = 0; t < cfg.trials_or(100); ++t)
      out.push_back(graphs::empty(static_cast<std::size_t>(rng.uniform_int(1, 6))));
    return out;
  };
  s.body = [](const WeightedGraph& g, SuiteRecorder& rec, const RunConfig&, Rng& rng) {
    const std::size_t n = g.size();
    std::vector<int> block(n);
    int current = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (i > 0 && rng.bernoulli(0.4)) ++current;
      block[i] = current;
    }
    auto rational = [&] {
      Rational r(static_cast<long>(rng.uniform_int(-9, 9)), static_cast<unsigned long>(rng.uniform_int(1, 5)));
      r.canonicalize();
      return r;
    };
    linalg::RationalMatrix m(n, n), b(n, n), c(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) = rational();
        if (block[i] == block[j]) {
          c(i, j) = 1;
          b(i, j) = rational();
        }
      }
    rec.set_matrix(linalg::to_double(m));
    std::string blocks;
    for (int x : block) blocks += std::to_string(x + 1);
    rec.detail("blocks " + blocks);
    const auto sides = jsm::hadamard_lemma(m, b, c);
    rec.require("(MB) o C = (M o C) B", sides.lhs == sides.rhs);
  };
  return s;
}

}  // namespace jointspec::verify
