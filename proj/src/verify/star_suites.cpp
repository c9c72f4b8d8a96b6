#include <cmath>

#include "jointspec/starlimit/limit_law.hpp"
#include "jointspec/verify/families.hpp"
#include "jointspec/verify/suites.hpp"

namespace jointspec::verify {

namespace {

const std::vector<std::size_t> kGrid{10, 100, 1000, 10000};
/// Odd moments of non-bipartite bases decay like c / sqrt(n); checked further out.
const std::vector<std::size_t> kOddGrid{100, 1000, 10000, 100000, 1000000};

/// Multi-indices of length p with 1 <= |k| <= max_total.
std::vector<MultiIndex> multi_indices(std::size_t p, unsigned max_total) {
  std::vector<MultiIndex> out;
  std::vector<unsigned> k(p, 0);
  while (true) {
    std::size_t pos = 0;
    while (pos < p) {
      ++k[pos];
      unsigned total = 0;
      for (unsigned v : k) total += v;
      if (total <= max_total) break;
      k[pos++] = 0;
    }
    if (pos == p) break;
    out.emplace_back(k);
  }
  return out;
}

std::vector<WeightedGraph> clt_family() {
  return {graphs::path(2), graphs::path(3), graphs::complete(3), graphs::complete(4)};
}

/// Proper merge sets of size 1 or 2.
std::vector<std::vector<int>> merge_sets(std::size_t n) {
  std::vector<std::vector<int>> out;
  for (std::size_t size = 1; size <= 2 && size < n; ++size)
    for (auto& u : subsets_of_size(n, size)) out.push_back(u);
  return out;
}

starlimit::ConvergenceConfig convergence_config(const RunConfig& cfg) {
  starlimit::ConvergenceConfig c;
  c.tol_final = cfg.tol("tol_final");
  c.max_slope = cfg.tol("slope");
  c.tol_direct = cfg.tol("direct");
  return c;
}

/// Two-coloring of a connected-or-not graph; empty when not bipartite.
std::vector<int> two_coloring(const WeightedGraph& g) {
  std::vector<int> color(g.size(), -1);
  for (std::size_t s = 0; s < g.size(); ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::vector<int> stack{static_cast<int>(s)};
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(v)) {
        if (w == v) return {};
        auto& cw = color[static_cast<std::size_t>(w)];
        if (cw < 0) {
          cw = 1 - color[static_cast<std::size_t>(v)];
          stack.push_back(w);
        } else if (cw == color[static_cast<std::size_t>(v)]) {
          return {};
        }
      }
    }
  }
  return color;
}

}  // namespace

Suite block_resolvent_suite() {
  Suite s;
  s.name = "block_resolvent";
  s.module = "starlimit";
  s.description = "Schur block of the assembled star product equals the closed form with factor n";
  s.default_trials = 40;
  s.family = [](const RunConfig& cfg, Rng& rng) {
    auto out = random_integer_graphs(cfg.trials_or(40) / 2, 2, 5, -1, 2, rng);
    auto more = random_simple_graphs(cfg.trials_or(40) - out.size(), 2, 5, rng);
    out.insert(out.end(), more.begin(), more.end());
    return out;
  };
  s.applies = [](const WeightedGraph& g) { return g.size() >= 2; };
  s.body = [](const WeightedGraph& g, SuiteRecorder& rec, const RunConfig& cfg, Rng& rng) {
    const std::vector<int> u = random_subset(g.size(), g.size() - 1, rng);
    const auto n = static_cast<std::size_t>(rng.uniform_int(1, 20));
    const starlimit::StarProduct sp(g, u, n);
    const double norm = std::max(1.0, sp.assembled().frobenius());
    const double z = rng.uniform(-0.5, 0.5) / norm;
    rec.detail("u=" + subset_str(u) + " n=" + std::to_string(n) + " z=" + to_string(z));
    std::vector<int> head(u.size());
    for (std::size_t i = 0; i < head.size(); ++i) head[i] = static_cast<int>(i);
    const linalg::MatrixD direct = linalg::schur_block(sp.assembled().dense(), head, z);
    const linalg::MatrixD closed = starlimit::star_block_resolvent(g, u, n, z);
    rec.close("assembled Schur block vs closed form", linalg::max_abs_diff(direct, closed), 0.0,
              cfg.tol("block_resolvent"));
  };
  return s;
}

Suite parity_suite() {
  Suite s;
  s.name = "parity";
  s.module = "starlimit";
  s.description = "odd scaled moments vanish for bipartite bases merged inside one part";
  s.default_trials = 20;
  s.family = [](const RunConfig& cfg, Rng& rng) {
    std::vector<WeightedGraph> out{graphs::path(2), graphs::path(3), graphs::path(4), graphs::star(3),
                                   graphs::cycle(4)};
    for (std::size_t t = 0; t < cfg.trials_or(20); ++t) {
      // Random bipartite graph: edges only between the first a and the last b vertices.
      const auto a = static_cast<std::size_t>(rng.uniform_int(1, 3));
      const auto b = static_cast<std::size_t>(rng.uniform_int(1, 3));
      std::vector<std::pair<int, int>> edges;
      for (std::size_t i = 0; i < a; ++i)
        for (std::size_t j = a; j < a + b; ++j)
          if (rng.bernoulli(0.6)) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
      out.push_back(graphs::from_edges(a + b, edges, "bipartite #" + std::to_string(t + 1)));
    }
    return out;
  };
  s.applies = [](const WeightedGraph& g) { return g.size() >= 2 && !two_coloring(g).empty(); };
  s.body = [](const WeightedGraph& g, SuiteRecorder& rec, const RunConfig&, Rng& rng) {
    const std::vector<int> color = two_coloring(g);
    std::vector<int> side;
    const int part = color[static_cast<std::size_t>(rng.uniform_int(0, static_cast<long long>(g.size() - 1)))];
    for (std::size_t v = 0; v < g.size(); ++v)
      if (color[v] == part && side.size() < 2) side.push_back(static_cast<int>(v));
    if (side.size() >= g.size()) side.pop_back();
    if (side.empty()) return;
    for (const MultiIndex& k : multi_indices(side.size(), 5)) {
      if (k.total() % 2 == 0) continue;
      for (std::size_t n : {std::size_t{1}, std::size_t{7}, std::size_t{50}}) {
        rec.detail("u=" + subset_str(side) + " k=" + k.str() + " n=" + std::to_string(n));
        const auto sm = starlimit::scaled_moment_reduced(g, side, n, k);
        rec.exact("odd scaled moment is zero", *sm.exact_unscaled, Rational(0));
      }
    }
  };
  return s;
}

Suite psd_suite() {
  Suite s;
  s.name = "psd";
  s.module = "starlimit";
  s.description = "D = A_uc A_cu is positive semidefinite and counts common neighbours";
  s.default_trials = 40;
  s.family = [](const RunConfig& cfg, Rng& rng) {
    auto out = random_integer_graphs(cfg.trials_or(40) / 2, 2, 7, -2, 2, rng);
    auto more = random_simple_graphs(cfg.trials_or(40) - out.size(), 2, 7, rng);
    out.insert(out.end(), more.begin(), more.end());
    return out;
  };
  s.applies = [](const WeightedGraph& g) { return g.size() >= 2; };
  s.body = [](const WeightedGraph& g, SuiteRecorder& rec, const RunConfig& cfg, Rng& rng) {
    const std::vector<int> u = random_subset(g.size(), std::min<std::size_t>(g.size() - 1, 4), rng);
    rec.detail("u=" + subset_str(u));
    const starlimit::LimitLaw law = starlimit::make_limit_law(g, u);
    const double scale = std::max(1.0, linalg::frobenius_norm(law.d));
    rec.close("min eigenvalue of D (clamped at 0)", std::min(0.0, law.min_eigenvalue()), 0.0, cfg.tol("psd") * scale);
    if (g.simple()) {
      const std::vector<int> rest = linalg::complement(u, g.size());
      bool counts = true;
      for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = 0; j < u.size(); ++j) {
          int common = 0;
          for (int w : rest)
            if (g(static_cast<std::size_t>(u[i]), static_cast<std::size_t>(w)) != 0 &&
                g(static_cast<std::size_t>(u[j]), static_cast<std::size_t>(w)) != 0)
              ++common;
          counts = counts && law.d(i, j) == common;
        }
      rec.require("d_ij counts common neighbours outside u", counts);
    }
  };
  return s;
}

Suite norm_bound_suite() {
  Suite s;
  s.name = "norm_bound";
  s.module = "starlimit";
  s.description = "every atom of the star product's measure has |x|^2 = ||A^(n)||_F^2 <= n ||A||_F^2";
  s.default_trials = 20;
  s.family = [](const RunConfig& cfg, Rng& rng) {
    auto out = random_integer_graphs(cfg.trials_or(20) / 2, 2, 4, -2, 2, rng);
    auto more = random_simple_graphs(cfg.trials_or(20) - out.size(), 2, 4, rng);
    out.insert(out.end(), more.begin(), more.end());
    return out;
  };
  s.applies = [](const WeightedGraph& g) { return g.size() >= 2 && g.size() <= 9; };
  s.body = [](const WeightedGraph& g, SuiteRecorder& rec, const RunConfig& cfg, Rng& rng) {
    const std::vector<int> u = random_subset(g.size(), g.size() - 1, rng);
    const std::size_t rest = g.size() - u.size();
    const std::size_t max_n = std::max<std::size_t>(1, (9 - u.size()) / rest);
    const auto n = static_cast<std::size_t>(rng.uniform_int(1, static_cast<long long>(max_n)));
    rec.detail("u=" + subset_str(u) + " n=" + std::to_string(n));
    const starlimit::StarProduct sp(g, u, n);
    const auto r = starlimit::norm_bound_check(sp);
    const double tol = cfg.tol("norm_bound") * std::max(1.0, r.bound);
    rec.require("||A^(n)||_F^2 <= n ||A||_F^2", r.frobenius_sq <= r.bound + tol);
    rec.close("atom squared norm vs ||A^(n)||_F^2", r.max_atom_deviation, 0.0, tol);
  };
  return s;
}

Suite convergence_suite() {
  Suite s;
  s.name = "convergence";
  s.module = "starlimit";
  s.description = "even scaled moments of G^(n) converge to det(D[k/2]) with log-log slope <= -0.4";
  s.family = [](const RunConfig&, Rng&) { return clt_family(); };
  s.applies = [](const WeightedGraph& g) { return g.size() >= 2 && g.size() <= 12; };
  s.body = [](const WeightedGraph& g, SuiteRecorder& rec, const RunConfig& cfg, Rng&) {
    const auto ccfg = convergence_config(cfg);
    for (const auto& u : merge_sets(g.size()))
      for (const MultiIndex& k : multi_indices(u.size(), 6)) {
        if (!k.all_even()) continue;
        rec.detail("u=" + subset_str(u) + " k=" + k.str());
        const auto r = starlimit::convergence_report(g, u, k, kGrid, ccfg);
        const auto& last = r.rows.back();
        rec.close("gap at n=" + std::to_string(last.n), last.gap, 0.0, ccfg.tol_final);
        if (r.slope) rec.require("log-log slope " + to_string(*r.slope) + " <= " + to_string(ccfg.max_slope), r.slope_ok);
        rec.require("gap non-increasing after burn-in", r.monotone);
        rec.close("assembled vs reduced moment (n <= 100)", r.max_direct_deviation, 0.0, ccfg.tol_direct);
      }
  };
  return s;
}

Suite odd_convergence_suite() {
  Suite s;
  s.name = "odd_convergence";
  s.module = "starlimit";
  s.description = "odd scaled moments of G^(n) tend to 0 with log-log slope <= -0.4";
  s.family = [](const RunConfig&, Rng&) { return clt_family(); };
  s.applies = [](const WeightedGraph& g) { return g.size() >= 2 && g.size() <= 12; };
  s.body = [](const WeightedGraph& g, SuiteRecorder& rec, const RunConfig& cfg, Rng&) {
    auto ccfg = convergence_config(cfg);
    std::size_t total = 0, above = 0;
    double worst = 0.0;
    std::string worst_case;
    for (const auto& u : merge_sets(g.size()))
      for (const MultiIndex& k : multi_indices(u.size(), 6)) {
        if (k.all_even()) continue;
        rec.detail("u=" + subset_str(u) + " k=" + k.str());
        const auto r = starlimit::convergence_report(g, u, k, kOddGrid, ccfg);
        ++total;
        for (const auto& row : r.rows)
          if (row.n == 10000 && row.gap > ccfg.tol_final) {
            ++above;
            if (row.gap > worst) {
              worst = row.gap;
              worst_case = "u=" + subset_str(u) + " k=" + k.str();
            }
          }
        rec.close("|scaled moment| at n=" + std::to_string(r.rows.back().n), r.rows.back().gap, 0.0, ccfg.tol_final);
        if (r.slope) rec.require("log-log slope " + to_string(*r.slope) + " <= " + to_string(ccfg.max_slope), r.slope_ok);
        rec.require("gap non-increasing after burn-in", r.monotone);
        rec.close("assembled vs reduced moment (n <= 100)", r.max_direct_deviation, 0.0, ccfg.tol_direct);
      }
    if (above)
      rec.note(g.name() + ": " + std::to_string(above) + " of " + std::to_string(total) + " odd multi-indices exceed " +
               to_string(ccfg.tol_final) + " at n=10000 (largest " + to_string(worst) + " at " + worst_case +
               "); these decay like n^{-1/2} and are checked at n=" + std::to_string(kOddGrid.back()));
  };
  return s;
}

Suite obata_suite() {
  Suite s;
  s.name = "obata";
  s.module = "starlimit";
  s.description = "single merged vertex: limit moments are d_o^{k/2} (even) and 0 (odd), exactly";
  s.family = [](const RunConfig&, Rng&) {
    std::vector<WeightedGraph> out{graphs::path(2), graphs::complete(3)};
    for (std::size_t leaves = 1; leaves <= 6; ++leaves) out.push_back(graphs::star(leaves));
    return out;
  };
  s.applies = [](const WeightedGraph& g) { return g.size() >= 2 && g.size() <= 12; };
  s.body = [](const WeightedGraph& g, SuiteRecorder& rec, const RunConfig& cfg, Rng&) {
    auto ccfg = convergence_config(cfg);
    for (std::size_t root = 0; root < g.size(); ++root) {
      rec.detail("root=" + std::to_string(root + 1));
      const auto r = starlimit::obata_special_case(g, static_cast<int>(root), kGrid, 6, ccfg);
      rec.require("limit moments equal d_o^{k/2} / 0 (d_o = " + to_string(r.d_o) + ")", r.limit_ok);
      for (std::size_t k = 1; k <= r.moments.size(); ++k) {
        if (k % 2 == 1) continue;
        const auto& m = r.moments[k - 1];
        rec.close("even moment k=" + std::to_string(k) + " gap at n=10000", m.rows.back().gap, 0.0, ccfg.tol_final);
      }
    }
  };
  return s;
}

Suite mgf_suite() {
  Suite s;
  s.name = "mgf";
  s.module = "starlimit";
  s.description = "E prod (1 - z_i B_i sqrt Y_i)^{-1} = E prod (1 - z_i^2 Y_i)^{-1}, truncated at degree 40";
  s.default_trials = 20;
  s.family = [](const RunConfig& cfg, Rng& rng) {
    std::vector<WeightedGraph> out{graphs::path(2), graphs::path(3)};
    auto more = random_simple_graphs(cfg.trials_or(20), 3, 6, rng);
    out.insert(out.end(), more.begin(), more.end());
    return out;
  };
  s.applies = [](const WeightedGraph& g) { return g.size() >= 2; };
  s.body = [](const WeightedGraph& g, SuiteRecorder& rec, const RunConfig& cfg, Rng& rng) {
    std::vector<int> u;
    if (g.name() == "P3") {
      u = {0, 2};
    } else if (g.size() == 2) {
      u = {0};
    } else {
      u = random_subset(g.size(), std::min<std::size_t>(g.size() - 1, 3), rng);
    }
    const starlimit::LimitLaw law = starlimit::make_limit_law(g, u);
    std::vector<double> z(u.size());
    for (double& x : z) x = rng.uniform(-0.1, 0.1);
    rec.detail("u=" + subset_str(u));
    const auto r = starlimit::rademacher_mgf_check(law, z, 40);
    rec.close("sign-averaged vs squared expansion", r.sides.lhs, r.sides.rhs, cfg.tol("mgf"));
  };
  return s;
}

}  // namespace jointspec::verify
