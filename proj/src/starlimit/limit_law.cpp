#include "jointspec/starlimit/limit_law.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace jointspec::starlimit {

LimitLaw make_limit_law(const WeightedGraph& g, std::vector<int> u) {
  // Validates u the same way the star product does.
  const StarProduct probe(g, u, 1);
  LimitLaw law;
  law.u = std::move(u);
  const std::span<const int> us(law.u);
  const std::span<const int> c(probe.rest());
  if (g.integral()) {
    const linalg::RationalMatrix a = g.matrix<Rational>();
    law.d_exact = linalg::submatrix(a, us, c) * linalg::submatrix(a, c, us);
    law.d = linalg::to_double(*law.d_exact);
  } else {
    law.d = linalg::submatrix(g.dense(), us, c) * linalg::submatrix(g.dense(), c, us);
  }
  const linalg::SymmetricMatrix ds(law.d, 1e-12 * std::max(1.0, linalg::frobenius_norm(law.d)));
  law.d_eigen = linalg::eigendecompose(ds);
  law.y_measure = jsm::build_measure(law.d_eigen);
  return law;
}

LimitMoment limit_moment(const LimitLaw& law, const MultiIndex& k) {
  if (k.size() != law.p()) throw std::invalid_argument("multi-index length must equal the merge-set size");
  LimitMoment out;
  if (!k.all_even()) {
    out.exact = Rational(0);
    return out;
  }
  std::vector<unsigned> half(k.size());
  for (std::size_t i = 0; i < k.size(); ++i) half[i] = k[i] / 2;
  const MultiIndex h(half);
  if (law.d_exact) {
    out.exact = jsm::generalized_moment(*law.d_exact, h);
    out.value = out.exact->get_d();
  } else {
    out.value = jsm::generalized_moment(law.d, h);
  }
  return out;
}

namespace {

double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

Rational rational_power(std::size_t n, unsigned e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), n, e);
  return Rational(r);
}

}  // namespace

ConvergenceReport convergence_report(const WeightedGraph& g, std::vector<int> u, const MultiIndex& k,
                                     const std::vector<std::size_t>& n_list, const ConvergenceConfig& cfg) {
  if (!std::is_sorted(n_list.begin(), n_list.end()) ||
      std::adjacent_find(n_list.begin(), n_list.end()) != n_list.end())
    throw std::invalid_argument("n list must be strictly increasing");
  const LimitLaw law = make_limit_law(g, u);
  const LimitMoment lim = limit_moment(law, k);
  ConvergenceReport rep;
  rep.u = u;
  rep.k = k;
  const unsigned total = k.total();
  for (std::size_t n : n_list) {
    ConvergenceRow row;
    row.n = n;
    const ScaledMoment sm = scaled_moment_reduced(g, u, n, k);
    row.scaled = sm.value;
    row.limit = lim.value;
    if (sm.exact_unscaled && lim.exact) {
      if (total % 2 == 0) {
        const Rational gap = *sm.exact_unscaled / rational_power(n, total / 2) - *lim.exact;
        row.gap = std::fabs(gap.get_d());
        row.gap_is_zero = sgn(gap) == 0;
      } else {
        row.gap = std::fabs(row.scaled);
        row.gap_is_zero = sgn(*sm.exact_unscaled) == 0;
      }
    } else {
      row.gap = std::fabs(row.scaled - row.limit);
    }
    if (n <= cfg.direct_limit) {
      row.direct = scaled_moment(StarProduct(g, u, n), k);
      const double dev = std::fabs(*row.direct - row.scaled) / std::max(1.0, std::fabs(row.scaled));
      rep.max_direct_deviation = std::max(rep.max_direct_deviation, dev);
      if (dev > cfg.tol_direct) rep.direct_ok = false;
    }
    rep.rows.push_back(row);
  }
  for (std::size_t i = cfg.burn_in + 1; i < rep.rows.size(); ++i)
    if (rep.rows[i].gap > rep.rows[i - 1].gap * (1 + 1e-9) + 1e-15) rep.monotone = false;
  if (!rep.rows.empty()) rep.final_ok = rep.rows.back().gap <= cfg.tol_final;

  std::vector<double> lx, ly;
  bool degenerate = false;
  for (const auto& row : rep.rows) {
    if (std::find(cfg.slope_grid.begin(), cfg.slope_grid.end(), row.n) == cfg.slope_grid.end()) continue;
    const bool zero = row.gap_is_zero ? *row.gap_is_zero : row.gap == 0.0;
    if (zero || row.gap <= 0.0) {
      degenerate = true;
      continue;
    }
    lx.push_back(std::log(static_cast<double>(row.n)));
    ly.push_back(std::log(row.gap));
  }
  if (!degenerate && lx.size() >= 2) {
    rep.slope = fit_slope(lx, ly);
    rep.slope_ok = *rep.slope <= cfg.max_slope;
  }
  return rep;
}

bool ObataReport::pass() const {
  if (!limit_ok) return false;
  // Odd moments vanish only at rate n^{-1/2}; their gaps are reported, not gated.
  for (std::size_t k = 2; k <= moments.size(); k += 2)
    if (!moments[k - 1].pass()) return false;
  return true;
}

ObataReport obata_special_case(const WeightedGraph& g, int root, const std::vector<std::size_t>& n_list, unsigned kmax,
                               const ConvergenceConfig& cfg) {
  ObataReport rep;
  rep.root = root;
  const auto r = static_cast<std::size_t>(root);
  if (root < 0 || r >= g.size()) throw std::domain_error("root vertex out of range");
  Rational d_exact(0);
  for (std::size_t j = 0; j < g.size(); ++j) {
    if (j == r) continue;
    rep.d_o += g(r, j) * g(r, j);
    if (g.integral()) d_exact += Rational(g(r, j)) * Rational(g(r, j));
  }
  const LimitLaw law = make_limit_law(g, {root});
  for (unsigned k = 1; k <= kmax; ++k) {
    const MultiIndex kk{k};
    rep.moments.push_back(convergence_report(g, {root}, kk, n_list, cfg));
    const LimitMoment lim = limit_moment(law, kk);
    if (k % 2 == 1) {
      if (lim.value != 0.0) rep.limit_ok = false;
    } else if (lim.exact && g.integral()) {
      Rational expected(1);
      for (unsigned t = 0; t < k / 2; ++t) expected *= d_exact;
      if (*lim.exact != expected) rep.limit_ok = false;
    } else {
      const double expected = std::pow(rep.d_o, k / 2.0);
      if (std::fabs(lim.value - expected) > 1e-12 * std::max(1.0, expected)) rep.limit_ok = false;
    }
  }
  return rep;
}

double mgf_tail_bound(const LimitLaw& law, std::span<const double> z, unsigned truncation) {
  double zmax = 0.0;
  for (double x : z) zmax = std::max(zmax, std::fabs(x));
  const double q = zmax * std::sqrt(std::max(0.0, law.max_eigenvalue()));
  if (q == 0.0) return 0.0;
  if (q >= 1.0) return std::numeric_limits<double>::infinity();
  const double p = static_cast<double>(law.p());
  // term(m) = C(m+p-1, p-1) q^m, built up by its ratio (m+p)/(m+1) q.
  double term = 1.0;
  for (unsigned m = 0; m <= truncation; ++m) term *= (m + p) / (m + 1.0) * q;
  double tail = 0.0;
  for (unsigned m = truncation + 1; m < truncation + 100000; ++m) {
    tail += term;
    const double ratio = (m + p) / (m + 1.0) * q;
    if (ratio < 1.0 && term * ratio / (1.0 - ratio) < 1e-18 * tail) break;
    term *= ratio;
  }
  return law.y_measure.total_variation() * tail;
}

namespace {

/// sum of dp[0..L] after multiplying the factors sum_m (x_i)^m, m stepping by `step`.
double truncated_product(const std::vector<double>& x, unsigned step, unsigned truncation) {
  std::vector<double> dp(truncation + 1, 0.0);
  dp[0] = 1.0;
  for (double xi : x) {
    std::vector<double> next(truncation + 1, 0.0);
    for (unsigned d = 0; d <= truncation; ++d) {
      if (dp[d] == 0.0) continue;
      double pw = 1.0;
      for (unsigned e = d; e <= truncation; e += step) {
        next[e] += dp[d] * pw;
        pw *= xi;
      }
    }
    dp = std::move(next);
  }
  double s = 0.0;
  for (double v : dp) s += v;
  return s;
}

}  // namespace

MgfCheck rademacher_mgf_check(const LimitLaw& law, std::span<const double> z, unsigned truncation, double max_tail) {
  const std::size_t p = law.p();
  if (z.size() != p) throw std::invalid_argument("z must have one entry per merged vertex");
  if (p > 16) throw std::domain_error("sign averaging is capped at 16 merged vertices");
  MgfCheck out;
  out.tail_bound = mgf_tail_bound(law, z, truncation);
  if (!(out.tail_bound <= max_tail)) {
    double zmax = 0.0;
    for (double x : z) zmax = std::max(zmax, std::fabs(x));
    double zr = zmax;
    std::vector<double> scaled(z.begin(), z.end());
    for (int it = 0; it < 200 && !(mgf_tail_bound(law, scaled, truncation) <= max_tail); ++it) {
      zr *= 0.9;
      for (std::size_t i = 0; i < p; ++i) scaled[i] = z[i] * (zr / zmax);
    }
    throw TruncationError("truncated expansion tail " + to_string(out.tail_bound) + " exceeds " + to_string(max_tail) +
                              "; use max|z_i| <= " + to_string(zr),
                          zr);
  }
  double lhs = 0.0, rhs = 0.0;
  const std::size_t patterns = std::size_t{1} << p;
  for (const auto& atom : law.y_measure.atoms) {
    std::vector<double> root(p), x(p), x2(p);
    for (std::size_t i = 0; i < p; ++i) {
      root[i] = std::sqrt(std::max(0.0, atom.point[i]));
      x2[i] = z[i] * z[i] * atom.point[i];
    }
    double avg = 0.0;
    for (std::size_t b = 0; b < patterns; ++b) {
      for (std::size_t i = 0; i < p; ++i) x[i] = ((b >> i) & 1 ? -1.0 : 1.0) * z[i] * root[i];
      avg += truncated_product(x, 1, truncation);
    }
    lhs += atom.weight * avg / static_cast<double>(patterns);
    rhs += atom.weight * truncated_product(x2, 2, truncation);
  }
  out.sides = {lhs, rhs};
  return out;
}

NormBoundReport norm_bound_check(const StarProduct& sp) {
  NormBoundReport rep;
  const linalg::SymmetricMatrix& a = sp.assembled();
  rep.frobenius_sq = a.frobenius() * a.frobenius();
  const double base = sp.base().weights().frobenius();
  rep.bound = static_cast<double>(sp.copies()) * base * base;
  const jsm::SignedMeasure mu = jsm::build_measure(linalg::eigendecompose(a));
  for (const auto& atom : mu.atoms) {
    double s = 0.0;
    for (double x : atom.point) s += x * x;
    rep.max_atom_norm_sq = std::max(rep.max_atom_norm_sq, s);
    rep.max_atom_deviation = std::max(rep.max_atom_deviation, std::fabs(s - rep.frobenius_sq));
  }
  return rep;
}

}  // namespace jointspec::starlimit
