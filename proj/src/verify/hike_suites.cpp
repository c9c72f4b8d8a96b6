#include <map>

#include "jointspec/hikes/generating.hpp"
#include "jointspec/hikes/walks.hpp"
#include "jointspec/verify/families.hpp"
#include "jointspec/verify/suites.hpp"

namespace jointspec::verify {

namespace {

using hikes::TruncatedSeries;

void compare_series(SuiteRecorder& rec, const std::string& what, const TruncatedSeries<Rational>& lhs,
                    const TruncatedSeries<Rational>& rhs, std::size_t from = 0) {
  for (std::size_t k = from; k <= lhs.degree(); ++k) rec.exact(what + " [z^" + std::to_string(k) + "]", lhs[k], rhs[k]);
}

}  // namespace

Suite reconciliation_suite() {
  Suite s;
  s.name = "reconciliation";
  s.module = "hikes";
  s.description = "closed-form generating functions vs hike, excursion and walk enumerations (exact)";
  s.family = [](const RunConfig&, Rng& rng) { return small_graph_family(5, rng); };
  s.applies = [](const WeightedGraph& g) { return g.integral() && g.size() <= 6; };
  s.body = [](const WeightedGraph& g, SuiteRecorder& rec, const RunConfig& cfg, Rng&) {
    const std::size_t L = cfg.truncation;
    const linalg::RationalMatrix a = g.matrix<Rational>();
    const hikes::CycleCatalog catalog(g);
    const std::vector<Rational> w = catalog.weights(a);
    const std::vector<hikes::Hike> all = hikes::enumerate_hikes(catalog, L);

    rec.detail("");
    const auto zeta = hikes::zeta_series(a, L);
    const auto mobius = hikes::mobius_series(a, L);
    compare_series(rec, "zeta * M = 1", zeta * mobius, TruncatedSeries<Rational>::constant(L, Rational(1)));
    compare_series(rec, "M = cycle-cover expansion", mobius, hikes::cycle_cover_series(catalog, a, L));
    compare_series(rec, "zeta = hike totals", zeta,
                   hikes::hike_totals(all, w, L, [](const hikes::Hike&) { return Rational(1); }));
    const auto trace_r = hikes::von_mangoldt_series(a, L);
    compare_series(rec, "tr R = Lambda totals", trace_r,
                   hikes::hike_totals(all, w, L, [&](const hikes::Hike& h) {
                     return Rational(hikes::von_mangoldt(catalog, h));
                   }),
                   1);

    for (const auto& u : nonempty_subsets(g.size())) {
      rec.detail("u=" + subset_str(u));
      const std::span<const int> us(u);
      const hikes::VertexMask mask = hikes::mask_of(u);
      const auto e = hikes::excursion_matrix(a, us, L);
      const auto e_enum = hikes::excursion_enumeration(a, us, L);
      for (std::size_t k = 0; k <= L; ++k)
        rec.require("E_u = excursion enumeration [z^" + std::to_string(k) + "]", e[k] == e_enum[k]);
      const auto r_block = hikes::resolvent_block(a, us, L);
      const auto r_full = hikes::block(hikes::resolvent_series(a, L), us);
      for (std::size_t k = 0; k <= L; ++k)
        rec.require("(I - E_u)^{-1} = R_uu [z^" + std::to_string(k) + "]", r_block[k] == r_full[k]);
      const auto ru = r_block.determinant();
      compare_series(rec, "r_u = zeta / zeta_c", ru, hikes::ru_by_zeta_ratio(a, us, L));
      compare_series(rec, "r_u = right-divisor filtered hikes", ru,
                     hikes::hike_totals(all, w, L, [&](const hikes::Hike& h) {
                       return Rational(hikes::right_divisor_filter(catalog, h, mask) ? 1 : 0);
                     }));
      compare_series(rec, "tr R_u = Lambda_u totals", r_block.trace(),
                     hikes::hike_totals(all, w, L, [&](const hikes::Hike& h) {
                       return Rational(hikes::von_mangoldt_u(catalog, h, mask));
                     }),
                     1);
      const auto log_ru = ru.log();
      compare_series(rec, "log r_u = Lambda_u / l_u totals", log_ru,
                     hikes::hike_totals(all, w, L, [&](const hikes::Hike& h) {
                       const int lam = hikes::von_mangoldt_u(catalog, h, mask);
                       if (lam == 0) return Rational(0);
                       Rational q(lam, static_cast<unsigned long>(hikes::visits(catalog, h, mask)));
                       q.canonicalize();
                       return q;
                     }));
      if (u.size() == 1) {
        compare_series(rec, "log r_i = closed walks / visits", log_ru, hikes::closed_walk_visit_series(a, u[0], L));
        const auto b = hikes::boolean_cumulants(a, u[0], L);
        compare_series(rec, "Boolean cumulants = single-vertex excursions", b, e_enum.entry(0, 0));
      }
    }
  };
  return s;
}

Suite closed_forms_suite() {
  Suite s;
  s.name = "closed_forms";
  s.accepts_graph = false;
  s.module = "hikes";
  s.description = "K3: zeta = 1/(1-3z^2-2z^3) and r_{1} = (1-z^2)/(1-3z^2-2z^3) to degree 10 (exact)";
  s.family = [](const RunConfig&, Rng&) { return std::vector<WeightedGraph>{graphs::complete(3)}; };
  s.body = [](const WeightedGraph& g, SuiteRecorder& rec, const RunConfig&, Rng&) {
    const std::size_t L = 10;
    const auto a = g.matrix<Rational>();
    const TruncatedSeries<Rational> denom(L, {Rational(1), Rational(0), Rational(-3), Rational(-2)});
    const TruncatedSeries<Rational> numer(L, {Rational(1), Rational(0), Rational(-1)});
    const std::vector<int> u{0};
    rec.detail("zeta");
    compare_series(rec, "zeta", hikes::zeta_series(a, L), denom.inverse());
    rec.detail("u={1}");
    compare_series(rec, "r_u", hikes::ru_series(a, std::span<const int>(u), L), numer * denom.inverse());
    // Independent check of the rational-function expansion itself: c_k = 3 c_{k-2} + 2 c_{k-3}.
    const auto expansion = denom.inverse();
    std::vector<Rational> rec_coeffs(L + 1, Rational(0));
    for (std::size_t k = 0; k <= L; ++k) {
      rec_coeffs[k] = k == 0 ? Rational(1) : Rational(0);
      if (k >= 2) rec_coeffs[k] += 3 * rec_coeffs[k - 2];
      if (k >= 3) rec_coeffs[k] += 2 * rec_coeffs[k - 3];
    }
    compare_series(rec, "1/(1-3z^2-2z^3) recurrence", expansion, TruncatedSeries<Rational>(L, rec_coeffs));
  };
  return s;
}

Suite pyramid_suite() {
  Suite s;
  s.name = "pyramids";
  s.module = "hikes";
  s.description = "closed walks project onto pyramids; walks per hike = Lambda(h)";
  s.family = [](const RunConfig&, Rng& rng) { return small_graph_family(4, rng); };
  s.applies = [](const WeightedGraph& g) { return g.size() <= 6; };
  s.body = [](const WeightedGraph& g, SuiteRecorder& rec, const RunConfig&, Rng&) {
    const std::size_t L = 6;
    const hikes::CycleCatalog catalog(g);
    const auto adj = hikes::adjacency_lists(g.dense());
    std::map<hikes::Hike, long> count;
    for (std::size_t v = 0; v < g.size(); ++v)
      hikes::for_each_walk(
          adj, static_cast<int>(v), L, [](int) { return true; },
          [&](const std::vector<int>& walk) {
            if (walk.back() == walk.front()) ++count[hikes::project_walk(catalog, walk)];
          });
    for (const hikes::Hike& h : hikes::enumerate_hikes(catalog, L)) {
      if (h.empty()) continue;
      const auto it = count.find(h);
      const long walks = it == count.end() ? 0 : it->second;
      const bool pyramid = hikes::maximal_pieces(catalog, h).size() == 1;
      rec.require("walks > 0 iff unique maximal piece", (walks > 0) == pyramid);
      rec.close("walks mapping to h = Lambda(h)", static_cast<double>(walks), hikes::von_mangoldt(catalog, h), 0.0);
      if (it != count.end()) count.erase(it);
    }
    rec.require("every projected walk is an enumerated hike", count.empty());
  };
  return s;
}

Suite zeta_u_witness_suite() {
  Suite s;
  s.name = "zeta_u_witness";
  s.accepts_graph = false;
  s.module = "hikes";
  s.description = "zeta of the induced subgraph differs from r_u (K3, u = {1})";
  s.family = [](const RunConfig&, Rng&) { return std::vector<WeightedGraph>{graphs::complete(3)}; };
  s.body = [](const WeightedGraph& g, SuiteRecorder& rec, const RunConfig& cfg, Rng&) {
    const auto a = g.matrix<Rational>();
    const std::vector<int> u{0};
    rec.detail("u={1}");
    const auto induced = hikes::induced_zeta(a, std::span<const int>(u), cfg.truncation);
    const auto ru = hikes::ru_series(a, std::span<const int>(u), cfg.truncation);
    compare_series(rec, "zeta_u of the induced subgraph is 1", induced,
                   TruncatedSeries<Rational>::constant(cfg.truncation, Rational(1)));
    rec.require("zeta_u != r_u", !(induced == ru));
  };
  return s;
}

Suite hike_dedup_suite() {
  Suite s;
  s.name = "hike_dedup";
  s.module = "hikes";
  s.description = "lexicographic-word hike enumeration equals the deduplicated closure, in normal form";
  s.family = [](const RunConfig&, Rng& rng) { return small_graph_family(4, rng); };
  s.applies = [](const WeightedGraph& g) { return g.size() <= 6; };
  s.body = [](const WeightedGraph& g, SuiteRecorder& rec, const RunConfig&, Rng&) {
    const std::size_t L = 6;
    const hikes::CycleCatalog catalog(g);
    std::vector<hikes::Hike> lex = hikes::enumerate_hikes(catalog, L);
    const std::vector<hikes::Hike> closure = hikes::enumerate_hikes_by_closure(catalog, L);
    bool normal = true;
    for (const auto& h : lex) normal = normal && hikes::is_normal_form(catalog, h);
    rec.require("every enumerated hike is in normal form", normal);
    std::sort(lex.begin(), lex.end());
    rec.require("no duplicates", std::adjacent_find(lex.begin(), lex.end()) == lex.end());
    rec.require("lex enumeration = closure", lex == closure);
  };
  return s;
}

}  // namespace jointspec::verify
