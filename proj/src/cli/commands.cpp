#include "jointspec/cli/commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "jointspec/cli/graph_io.hpp"
#include "jointspec/cli/report.hpp"
#include "jointspec/hikes/generating.hpp"
#include "jointspec/hikes/walks.hpp"
#include "jointspec/jsm/measure.hpp"
#include "jointspec/jsm/moments.hpp"
#include "jointspec/starlimit/limit_law.hpp"
#include "jointspec/verify/families.hpp"
#include "jointspec/verify/suites.hpp"

namespace jointspec::cli {

namespace {

constexpr const char* kFooter =
    "CSV output (--out csv) always has the columns name,lhs,rhs,abs_gap,tol,pass.\n"
    "  moments   one row: determinant formula (lhs) vs atom sum over the measure (rhs)\n"
    "  measure   one row per atom (lhs = weight) and a total-mass check\n"
    "  clt       one row per n (scaled moment vs limit), assembled-vs-reduced rows, slope and monotonicity\n"
    "  obata     one row per k: limit moment vs d_o^{k/2}, and the gap at the largest n\n"
    "  hikes     one row per series coefficient: closed form vs enumeration\n"
    "  verify    one row per suite: its worst check\n"
    "Vertices are 1-based. Exit codes: 0 pass, 1 verification failure, 2 usage or parse error.";

struct Common {
  std::string graph;
  std::string format = "edge";
  std::string gen;
  std::uint64_t seed = 1;
  std::size_t trials = 0;
  unsigned trunc = 8;
  std::string out = "text";
  std::vector<std::string> tol;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--graph", c.graph, "graph file");
  sub->add_option("--format", c.format, "graph file format: edge or dense")->capture_default_str();
  sub->add_option("--gen", c.gen, "built-in graph instead of a file: path:N, cycle:N, complete:N, star:LEAVES, empty:N, gnp:N:P");
  sub->add_option("--seed", c.seed, "random seed")->capture_default_str();
  sub->add_option("--trials", c.trials, "random cases per suite (0 = suite default)")->capture_default_str();
  sub->add_option("--trunc", c.trunc, "series truncation degree L")->capture_default_str();
  sub->add_option("--out", c.out, "output format: text or csv")->capture_default_str();
  sub->add_option("--tol", c.tol, "tolerance override NAME=VALUE (repeatable)");
}

template <class T>
std::vector<T> parse_list(const std::string& s, const std::string& flag) {
  std::vector<T> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::istringstream is(item);
    T v;
    if (!(is >> v) || !(is >> std::ws).eof()) throw UsageError(flag + ": cannot parse '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw UsageError(flag + ": empty list");
  return out;
}

std::vector<int> parse_vertices(const std::string& s, const std::string& flag, std::size_t n) {
  std::vector<int> out;
  for (long long v : parse_list<long long>(s, flag)) {
    if (v < 1 || static_cast<std::size_t>(v) > n)
      throw UsageError(flag + ": vertex " + std::to_string(v) + " outside 1.." + std::to_string(n));
    if (std::find(out.begin(), out.end(), static_cast<int>(v - 1)) != out.end())
      throw UsageError(flag + ": vertex " + std::to_string(v) + " repeated");
    out.push_back(static_cast<int>(v - 1));
  }
  return out;
}

MultiIndex parse_index(const std::string& s, std::size_t expected) {
  std::vector<unsigned> k;
  for (long long v : parse_list<long long>(s, "--k")) {
    if (v < 0) throw UsageError("--k: exponents must be nonnegative");
    k.push_back(static_cast<unsigned>(v));
  }
  if (k.size() != expected)
    throw UsageError("--k: expected " + std::to_string(expected) + " exponents, got " + std::to_string(k.size()));
  return MultiIndex(k);
}

WeightedGraph load(const Common& c) {
  if (!c.graph.empty() && !c.gen.empty()) throw UsageError("use either --graph or --gen, not both");
  if (!c.graph.empty()) return load_graph(c.graph, parse_format(c.format));
  if (!c.gen.empty()) {
    Rng rng(c.seed);
    return graphs::from_spec(c.gen, rng);
  }
  throw UsageError("a graph is required (--graph PATH or --gen SPEC)");
}

verify::RunConfig run_config(const Common& c) {
  verify::RunConfig cfg;
  cfg.seed = c.seed;
  cfg.trials = c.trials;
  cfg.truncation = c.trunc;
  for (const auto& item : c.tol) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("--tol expects NAME=VALUE, got '" + item + "'");
    const std::string name = item.substr(0, eq);
    if (!verify::default_tolerances().count(name)) {
      std::string known;
      for (const auto& [k, v] : verify::default_tolerances()) known += (known.empty() ? "" : ", ") + k;
      throw UsageError("--tol: unknown tolerance '" + name + "' (known: " + known + ")");
    }
    char* end = nullptr;
    const double v = std::strtod(item.c_str() + eq + 1, &end);
    if (end == item.c_str() + eq + 1 || *end != '\0' || !std::isfinite(v))
      throw UsageError("--tol: bad value in '" + item + "'");
    cfg.tolerances[name] = v;
  }
  return cfg;
}

std::string point_str(const std::vector<double>& x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) s += (i ? ", " : "") + short_number(x[i]);
  return s + ")";
}

// moments

int cmd_moments(const Common& c, const std::string& k_text, std::ostream& out) {
  const WeightedGraph g = load(c);
  const verify::RunConfig cfg = run_config(c);
  const MultiIndex k = parse_index(k_text, g.size());
  const jsm::Moment m = jsm::generalized_moment(g.weights(), k);
  const std::string value = m.exact ? m.exact->get_str() : exact_number(m.value);
  if (parse_output(c.out) == OutputFormat::text) {
    out << value << "\n";
    return kPass;
  }
  double rhs = m.value;
  double tol = 0.0;
  if (g.size() <= jsm::MeasureConfig{}.max_dimension) {
    const jsm::SignedMeasure mu = jsm::build_measure(linalg::eigendecompose(g.weights()));
    rhs = jsm::moment_oracle(mu, k);
    tol = cfg.tol("moment_float") * std::max(1.0, jsm::moment_magnitude(mu, k));
  }
  const bool pass = std::fabs(m.value - rhs) <= tol;
  CheckRow row = check_row("m" + k.str(), m.value, rhs, tol, pass);
  row.lhs = value;
  write_csv(out, {row});
  return pass ? kPass : kVerificationFailure;
}

// measure

int cmd_measure(const Common& c, std::ostream& out) {
  const WeightedGraph g = load(c);
  const verify::RunConfig cfg = run_config(c);
  const linalg::EigenSystem eig = linalg::eigendecompose(g.weights());
  const jsm::SignedMeasure mu = jsm::build_measure(eig);
  const double mass = mu.total_mass();
  const bool pass = std::fabs(mass - 1.0) <= cfg.tol("mass");
  if (parse_output(c.out) == OutputFormat::csv) {
    std::vector<CheckRow> rows;
    for (const auto& atom : mu.atoms) rows.push_back(value_row("atom " + point_str(atom.point), exact_number(atom.weight)));
    rows.push_back(check_row("total mass", mass, 1.0, cfg.tol("mass"), pass));
    write_csv(out, rows);
  } else {
    out << "eigenvalues: " << point_str(eig.eigenvalues) << "\n";
    out << "atoms: " << mu.atoms.size() << "  total mass: " << short_number(mass)
        << "  total variation: " << short_number(mu.total_variation()) << "\n";
    std::vector<std::vector<std::string>> table{{"point", "weight"}};
    for (const auto& atom : mu.atoms) table.push_back({point_str(atom.point), short_number(atom.weight)});
    write_table(out, table);
  }
  return pass ? kPass : kVerificationFailure;
}

// clt

starlimit::ConvergenceConfig convergence_config(const verify::RunConfig& cfg) {
  starlimit::ConvergenceConfig cc;
  cc.tol_final = cfg.tol("tol_final");
  cc.max_slope = cfg.tol("slope");
  cc.tol_direct = cfg.tol("direct");
  return cc;
}

std::vector<std::size_t> parse_n_list(const std::string& s) {
  std::vector<std::size_t> out;
  for (long long v : parse_list<long long>(s, "--n")) {
    if (v < 1) throw UsageError("--n: copies must be positive");
    out.push_back(static_cast<std::size_t>(v));
  }
  for (std::size_t i = 1; i < out.size(); ++i)
    if (out[i] <= out[i - 1]) throw UsageError("--n: values must be strictly increasing");
  return out;
}

void convergence_rows(const starlimit::ConvergenceReport& r, const starlimit::ConvergenceConfig& cc,
                      const std::string& prefix, std::vector<CheckRow>& rows, bool gated = true) {
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    const auto& row = r.rows[i];
    const bool last = i + 1 == r.rows.size();
    CheckRow cr = check_row(prefix + "n=" + std::to_string(row.n), row.scaled, row.limit, cc.tol_final,
                            row.gap <= cc.tol_final);
    cr.abs_gap = exact_number(row.gap);
    if (!last || !gated) cr.tol = cr.pass = "";
    rows.push_back(cr);
  }
  for (const auto& row : r.rows)
    if (row.direct)
      rows.push_back(check_row(prefix + "assembled n=" + std::to_string(row.n), *row.direct, row.scaled,
                               cc.tol_direct * std::max(1.0, std::fabs(row.scaled)),
                               std::fabs(*row.direct - row.scaled) <= cc.tol_direct * std::max(1.0, std::fabs(row.scaled))));
  if (r.slope) {
    CheckRow s = check_row(prefix + "log-log slope", *r.slope, cc.max_slope, 0.0, r.slope_ok);
    s.abs_gap = s.tol = "";
    rows.push_back(s);
  }
  CheckRow m = value_row(prefix + "monotone after burn-in", r.monotone ? "true" : "false");
  m.pass = r.monotone ? "true" : "false";
  rows.push_back(m);
}

void convergence_text(const starlimit::ConvergenceReport& r, const starlimit::ConvergenceConfig& cc, std::ostream& out) {
  std::vector<std::vector<std::string>> table{{"n", "scaled", "assembled", "limit", "gap"}};
  for (const auto& row : r.rows)
    table.push_back({std::to_string(row.n), short_number(row.scaled), row.direct ? short_number(*row.direct) : "-",
                     short_number(row.limit), short_number(row.gap)});
  write_table(out, table);
  out << "log-log slope: " << (r.slope ? short_number(*r.slope) : std::string("n/a (gap exactly zero)"));
  if (r.slope) out << (r.slope_ok ? " <= " : " > ") << short_number(cc.max_slope);
  out << "\nmonotone after burn-in: " << (r.monotone ? "yes" : "no") << "\n";
  out << "final gap <= " << short_number(cc.tol_final) << ": " << (r.final_ok ? "yes" : "no") << "\n";
  if (r.max_direct_deviation > 0 || !r.direct_ok)
    out << "assembled vs reduced deviation: " << short_number(r.max_direct_deviation) << "\n";
}

int cmd_clt(const Common& c, const std::string& merge, const std::string& n_text, const std::string& k_text,
            std::ostream& out) {
  const WeightedGraph g = load(c);
  const verify::RunConfig cfg = run_config(c);
  if (merge.empty()) throw UsageError("--merge is required");
  const std::vector<int> u = parse_vertices(merge, "--merge", g.size());
  const MultiIndex k = k_text.empty() ? MultiIndex(std::vector<unsigned>(u.size(), 2)) : parse_index(k_text, u.size());
  const auto n_list = parse_n_list(n_text);
  const auto cc = convergence_config(cfg);
  const auto r = starlimit::convergence_report(g, u, k, n_list, cc);
  const auto law = starlimit::make_limit_law(g, u);
  if (parse_output(c.out) == OutputFormat::csv) {
    std::vector<CheckRow> rows;
    convergence_rows(r, cc, "", rows);
    write_csv(out, rows);
  } else {
    out << "merge set " << verify::subset_str(u) << ", k = " << k.str() << "\n";
    out << "D = A_uc A_cu:\n" << verify::dense_block(law.d).substr(verify::dense_block(law.d).find('\n') + 1);
    convergence_text(r, cc, out);
    out << (r.pass() ? "PASS" : "FAIL") << "\n";
  }
  return r.pass() ? kPass : kVerificationFailure;
}

// obata

int cmd_obata(const Common& c, const std::string& root_text, const std::string& n_text, unsigned kmax,
              std::ostream& out) {
  const WeightedGraph g = load(c);
  const verify::RunConfig cfg = run_config(c);
  if (root_text.empty()) throw UsageError("--root is required");
  const std::vector<int> root = parse_vertices(root_text, "--root", g.size());
  if (root.size() != 1) throw UsageError("--root takes a single vertex");
  const auto cc = convergence_config(cfg);
  const auto r = starlimit::obata_special_case(g, root[0], parse_n_list(n_text), kmax, cc);
  if (parse_output(c.out) == OutputFormat::csv) {
    std::vector<CheckRow> rows;
    for (std::size_t k = 1; k <= r.moments.size(); ++k) {
      const double expected = k % 2 ? 0.0 : std::pow(r.d_o, static_cast<double>(k) / 2.0);
      const double limit = r.moments[k - 1].rows.back().limit;
      rows.push_back(check_row("limit k=" + std::to_string(k), limit, expected, 0.0, limit == expected));
      convergence_rows(r.moments[k - 1], cc, "k=" + std::to_string(k) + " ", rows, k % 2 == 0);
    }
    write_csv(out, rows);
  } else {
    out << "root " << root[0] + 1 << ", d_o = " << short_number(r.d_o) << "\n";
    std::vector<std::vector<std::string>> table{{"k", "limit", "d_o^(k/2) or 0", "scaled (largest n)", "gap", "slope"}};
    for (std::size_t k = 1; k <= r.moments.size(); ++k) {
      const auto& m = r.moments[k - 1];
      table.push_back({std::to_string(k), short_number(m.rows.back().limit),
                       short_number(k % 2 ? 0.0 : std::pow(r.d_o, static_cast<double>(k) / 2.0)),
                       short_number(m.rows.back().scaled), short_number(m.rows.back().gap),
                       m.slope ? short_number(*m.slope) : "-"});
    }
    write_table(out, table);
    out << "limit moments match d_o^{k/2}: " << (r.limit_ok ? "yes" : "no") << "\n";
    out << "odd k: scaled moments decay like n^{-1/2} and are not gated\n";
    out << (r.pass() ? "PASS" : "FAIL") << "\n";
  }
  return r.pass() ? kPass : kVerificationFailure;
}

// hikes

std::string cell(const Rational& x) { return x.get_str(); }
std::string cell(double x) { return short_number(x); }
double gap_of(const Rational& a, const Rational& b) { return std::fabs(Rational(a - b).get_d()); }
double gap_of(double a, double b) { return std::fabs(a - b); }

template <class T>
int hikes_report(const WeightedGraph& g, const std::vector<int>& u, std::size_t L, OutputFormat fmt, std::ostream& out) {
  using hikes::TruncatedSeries;
  const bool exact = std::is_same_v<T, Rational>;
  const linalg::Matrix<T> a = g.matrix<T>();
  const hikes::CycleCatalog catalog(g);
  const std::vector<T> w = catalog.weights(a);
  const std::vector<hikes::Hike> all = hikes::enumerate_hikes(catalog, L);

  std::vector<std::vector<std::string>> table;
  std::vector<CheckRow> rows;
  std::size_t checks = 0, failures = 0;
  std::vector<std::string> header{"series"};
  for (std::size_t k = 0; k <= L; ++k) header.push_back("z^" + std::to_string(k));
  table.push_back(header);
  auto show = [&](const std::string& name, const TruncatedSeries<T>& s) {
    std::vector<std::string> row{name};
    for (std::size_t k = 0; k <= L; ++k) row.push_back(cell(s[k]));
    table.push_back(row);
  };
  auto compare = [&](const std::string& name, const TruncatedSeries<T>& lhs, const TruncatedSeries<T>& rhs,
                     std::size_t from) {
    for (std::size_t k = from; k <= L; ++k) {
      const double gap = gap_of(lhs[k], rhs[k]);
      const double tol = exact ? 0.0 : 1e-9 * std::max(1.0, std::fabs(to_double(rhs[k])));
      const bool ok = exact ? gap == 0.0 && lhs[k] == rhs[k] : gap <= tol;
      ++checks;
      if (!ok) ++failures;
      CheckRow row = check_row(name + " [z^" + std::to_string(k) + "]", to_double(lhs[k]), to_double(rhs[k]), tol, ok);
      if (exact) {
        row.lhs = cell(lhs[k]);
        row.rhs = cell(rhs[k]);
      }
      rows.push_back(row);
    }
  };
  auto totals = [&](auto&& value) { return hikes::hike_totals(all, w, L, value); };

  const auto zeta = hikes::zeta_series(a, L);
  const auto mobius = hikes::mobius_series(a, L);
  const auto hike_total = totals([](const hikes::Hike&) { return T(1); });
  const auto trace_r = hikes::von_mangoldt_series(a, L);
  const auto lambda_total = totals([&](const hikes::Hike& h) { return T(hikes::von_mangoldt(catalog, h)); });
  show("zeta = 1/det(I-zA)", zeta);
  show("hike totals", hike_total);
  show("M = det(I-zA)", mobius);
  show("tr R", trace_r);
  compare("zeta*M", zeta * mobius, TruncatedSeries<T>::constant(L, T(1)), 0);
  compare("M vs cycle covers", mobius, hikes::cycle_cover_series(catalog, a, L), 0);
  compare("zeta vs hikes", zeta, hike_total, 0);
  compare("tr R vs Lambda", trace_r, lambda_total, 1);

  if (!u.empty()) {
    const std::span<const int> us(u);
    const hikes::VertexMask mask = hikes::mask_of(u);
    const auto e = hikes::excursion_matrix(a, us, L);
    const auto e_enum = hikes::excursion_enumeration(a, us, L);
    for (std::size_t i = 0; i < u.size(); ++i)
      for (std::size_t j = 0; j < u.size(); ++j) {
        const std::string name = u.size() == 1 ? "E_u" : "E_u(" + std::to_string(u[i] + 1) + "," + std::to_string(u[j] + 1) + ")";
        show(name, e.entry(i, j));
        compare(name + " vs excursions", e.entry(i, j), e_enum.entry(i, j), 0);
      }
    const auto r_block = hikes::resolvent_block(a, us, L);
    const auto ru = r_block.determinant();
    show("r_u", ru);
    compare("r_u vs zeta/zeta_c", ru, hikes::ru_by_zeta_ratio(a, us, L), 0);
    compare("r_u vs filtered hikes", ru, totals([&](const hikes::Hike& h) {
              return T(hikes::right_divisor_filter(catalog, h, mask) ? 1 : 0);
            }),
            0);
    show("tr R_u", r_block.trace());
    compare("tr R_u vs Lambda_u", r_block.trace(),
            totals([&](const hikes::Hike& h) { return T(hikes::von_mangoldt_u(catalog, h, mask)); }), 1);
    const auto log_ru = ru.log();
    show("log r_u", log_ru);
    compare("log r_u vs Lambda_u/l_u", log_ru, totals([&](const hikes::Hike& h) {
              const int lam = hikes::von_mangoldt_u(catalog, h, mask);
              return lam == 0 ? T(0) : T(lam) / T(hikes::visits(catalog, h, mask));
            }),
            0);
    if (u.size() == 1) compare("log r_i vs walks/visits", log_ru, hikes::closed_walk_visit_series(a, u[0], L), 0);
    if (u.size() == 1) {
      const auto b = hikes::boolean_cumulants(a, u[0], L);
      show("Boolean cumulants", b);
      compare("Boolean cumulants vs excursions", b, e_enum.entry(0, 0), 0);
    }
  }

  if (fmt == OutputFormat::csv) {
    write_csv(out, rows);
  } else {
    out << "simple cycles: " << catalog.size() << "  hikes of length <= " << L << ": " << all.size();
    if (!u.empty()) out << "  subset " << verify::subset_str(u);
    out << (exact ? "  (exact arithmetic)" : "  (floating point)") << "\n";
    write_table(out, table);
    out << "reconciliation: " << checks - failures << "/" << checks << " coefficient checks agree\n";
    for (const auto& r : rows)
      if (r.pass == "false") out << "  mismatch: " << r.name << " closed form " << r.lhs << " vs " << r.rhs << "\n";
  }
  return failures ? kVerificationFailure : kPass;
}

int cmd_hikes(const Common& c, const std::string& subset, std::ostream& out) {
  const WeightedGraph g = load(c);
  const std::vector<int> u = subset.empty() ? std::vector<int>{} : parse_vertices(subset, "--subset", g.size());
  const OutputFormat fmt = parse_output(c.out);
  if (g.integral()) return hikes_report<Rational>(g, u, c.trunc, fmt, out);
  return hikes_report<double>(g, u, c.trunc, fmt, out);
}

// verify

int cmd_verify(const Common& c, bool random, const std::vector<std::string>& only, bool list, bool timing,
               std::ostream& out) {
  const auto suites = verify::all_suites();
  if (list) {
    std::vector<std::vector<std::string>> table{{"suite", "module", "description"}};
    for (const auto& s : suites) table.push_back({s.name, s.module, s.description});
    write_table(out, table);
    return kPass;
  }
  for (const auto& name : only)
    if (std::none_of(suites.begin(), suites.end(), [&](const verify::Suite& s) { return s.name == name; }))
      throw UsageError("--suite: unknown suite '" + name + "' (see verify --list)");
  const bool have_graph = !c.graph.empty() || !c.gen.empty();
  if (random == have_graph) throw UsageError("verify needs exactly one of --random or --graph/--gen");
  const verify::RunConfig cfg = run_config(c);
  std::vector<WeightedGraph> user;
  if (have_graph) user.push_back(load(c));

  std::vector<verify::SuiteResult> results;
  for (const auto& s : suites) {
    if (!only.empty() && std::find(only.begin(), only.end(), s.name) == only.end()) continue;
    if (have_graph && !s.accepts_graph) continue;
    results.push_back(verify::run_suite(s, cfg, have_graph ? &user : nullptr));
  }
  std::size_t passed = 0;
  const verify::SuiteResult* first_failure = nullptr;
  for (const auto& r : results) {
    if (r.pass()) ++passed;
    else if (!first_failure) first_failure = &r;
  }

  if (parse_output(c.out) == OutputFormat::csv) {
    std::vector<CheckRow> rows;
    for (const auto& r : results) {
      if (!r.worst) {
        CheckRow row = value_row(r.name, "");
        row.pass = r.cases ? "true" : "n/a";
        rows.push_back(row);
        continue;
      }
      CheckRow row = check_row(r.name, r.worst->lhs, r.worst->rhs, r.worst->tol, r.pass());
      row.abs_gap = exact_number(r.worst->gap);
      rows.push_back(row);
    }
    write_csv(out, rows);
  } else {
    std::vector<std::vector<std::string>> table{{"suite", "module", "cases", "checks", "failures", "worst gap", "tol", "result"}};
    if (timing) table[0].push_back("seconds");
    for (std::size_t i = 0; i < results.size(); ++i) {
      const auto& r = results[i];
      std::string module;
      for (const auto& s : suites)
        if (s.name == r.name) module = s.module;
      std::vector<std::string> row{r.name, module, std::to_string(r.cases), std::to_string(r.checks),
                                   std::to_string(r.failures), r.worst ? short_number(r.worst->gap) : "-",
                                   r.worst ? short_number(r.worst->tol) : "-",
                                   r.cases == 0 ? "n/a" : (r.pass() ? "pass" : "FAIL")};
      if (timing) row.push_back(short_number(std::round(r.seconds * 100) / 100));
      table.push_back(row);
    }
    write_table(out, table);
    bool header = false;
    for (const auto& r : results)
      for (const auto& note : r.notes) {
        if (!header) out << "notes:\n";
        header = true;
        out << "  " << r.name << ": " << note << "\n";
      }
    out << passed << "/" << results.size() << " suites passed\n";
    if (first_failure && first_failure->counterexample) {
      const auto& ce = *first_failure->counterexample;
      out << "first counterexample (suite " << first_failure->name << "):\n"
          << "  check:  " << ce.check << "\n"
          << "  case:   " << ce.detail << "\n"
          << "  lhs = " << exact_number(ce.lhs) << "  rhs = " << exact_number(ce.rhs) << "  tol = " << exact_number(ce.tol)
          << "\n"
          << "  matrix (dense format, 1-based vertices):\n"
          << verify::dense_block(ce.matrix);
    }
  }
  return passed == results.size() ? kPass : kVerificationFailure;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Joint spectral measures, star-product limits and hike generating functions"};
  app.footer(kFooter);
  app.require_subcommand(1);

  Common c;
  std::string k_text, merge, n_text = "10,100,1000,10000", root, subset;
  unsigned kmax = 6;
  bool random = false, list = false, timing = false;
  std::vector<std::string> only;

  auto* moments = app.add_subcommand("moments", "generalized moment m[k] = det(A[k])");
  add_common(moments, c);
  moments->add_option("--k", k_text, "exponents k_1,...,k_N")->required();

  auto* measure = app.add_subcommand("measure", "atoms and weights of the joint spectral measure (N <= 9)");
  add_common(measure, c);

  auto* clt = app.add_subcommand("clt", "scaled moments of the n-fold star product against the limit law");
  add_common(clt, c);
  clt->add_option("--merge", merge, "merged vertex subset u, e.g. 1,3");
  clt->add_option("--n", n_text, "increasing list of copy counts")->capture_default_str();
  clt->add_option("--k", k_text, "exponents over u (default all 2)");

  auto* obata = app.add_subcommand("obata", "single merged vertex: limit moments against d_o^{k/2}");
  add_common(obata, c);
  obata->add_option("--root", root, "merged vertex");
  obata->add_option("--n", n_text, "increasing list of copy counts")->capture_default_str();
  obata->add_option("--k", kmax, "largest moment order")->capture_default_str();

  auto* hikes_cmd = app.add_subcommand("hikes", "hike generating functions and their enumeration checks");
  add_common(hikes_cmd, c);
  hikes_cmd->add_option("--subset", subset, "vertex subset u for E_u, r_u and tr R_u");

  auto* verify_cmd = app.add_subcommand("verify", "run the identity suites");
  add_common(verify_cmd, c);
  verify_cmd->add_flag("--random", random, "run every suite on its own random family");
  verify_cmd->add_option("--suite", only, "restrict to the named suites (repeatable)");
  verify_cmd->add_flag("--list", list, "list the suites and exit");
  verify_cmd->add_flag("--timing", timing, "add a seconds column (output is then not reproducible)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsageError;
  }

  try {
    if (*moments) return cmd_moments(c, k_text, out);
    if (*measure) return cmd_measure(c, out);
    if (*clt) return cmd_clt(c, merge, n_text, k_text, out);
    if (*obata) return cmd_obata(c, root, n_text, kmax, out);
    if (*hikes_cmd) return cmd_hikes(c, subset, out);
    if (*verify_cmd) return cmd_verify(c, random, only, list, timing, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace jointspec::cli
