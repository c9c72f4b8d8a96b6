#include "jointspec/verify/suite.hpp"

#include <chrono>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace jointspec::verify {

const std::map<std::string, double>& default_tolerances() {
  static const std::map<std::string, double> table{
      {"basis", 1e-8},          {"block_resolvent", 1e-10}, {"det_float", 1e-8},   {"eig_orth", 1e-10},
      {"eig_reconstruct", 1e-8}, {"moment_float", 1e-7},     {"marginal", 1e-8},    {"mass", 1e-10},
      {"mgf", 1e-9},            {"minor_float", 1e-8},      {"norm_bound", 1e-8},  {"psd", 1e-9},
      {"schur", 1e-10},         {"slater", 1e-8},           {"slope", -0.4},       {"tol_final", 0.05},
      {"direct", 1e-9},
  };
  return table;
}

double RunConfig::tol(const std::string& name) const {
  if (auto it = tolerances.find(name); it != tolerances.end()) return it->second;
  const auto& table = default_tolerances();
  auto it = table.find(name);
  if (it == table.end()) throw std::invalid_argument("unknown tolerance '" + name + "'");
  return it->second;
}

SuiteRecorder::SuiteRecorder(std::string name, std::string description) {
  result_.name = std::move(name);
  result_.description = std::move(description);
}

void SuiteRecorder::begin_case(const linalg::MatrixD& matrix, std::string detail) {
  matrix_ = matrix;
  case_name_ = std::move(detail);
  detail_ = case_name_;
  ++result_.cases;
}

void SuiteRecorder::detail(const std::string& extra) { detail_ = extra.empty() ? case_name_ : case_name_ + "; " + extra; }

void SuiteRecorder::set_matrix(const linalg::MatrixD& matrix) { matrix_ = matrix; }

bool SuiteRecorder::record(const std::string& check, double lhs, double rhs, double gap, double tol, bool ok) {
  ++result_.checks;
  const double ratio = tol > 0 ? gap / tol : (gap > 0 ? INFINITY : 0.0);
  if (!ok || std::isnan(gap)) {
    ok = false;
    ++result_.failures;
    if (!result_.counterexample) result_.counterexample = Counterexample{check, detail_, matrix_, lhs, rhs, tol};
  }
  if (!result_.worst || ratio > worst_ratio_) {
    worst_ratio_ = ratio;
    result_.worst = WorstCheck{check, lhs, rhs, gap, tol};
  }
  return ok;
}

bool SuiteRecorder::close(const std::string& check, double lhs, double rhs, double tol) {
  const double gap = std::fabs(lhs - rhs);
  return record(check, lhs, rhs, gap, tol, gap <= tol);
}

bool SuiteRecorder::close_relative(const std::string& check, double lhs, double rhs, double tol) {
  const double scaled = tol * std::max(1.0, std::fabs(rhs));
  const double gap = std::fabs(lhs - rhs);
  return record(check, lhs, rhs, gap, scaled, gap <= scaled);
}

bool SuiteRecorder::exact(const std::string& check, const Rational& lhs, const Rational& rhs) {
  const Rational diff = lhs - rhs;
  return record(check, lhs.get_d(), rhs.get_d(), std::fabs(diff.get_d()), 0.0, sgn(diff) == 0);
}

bool SuiteRecorder::require(const std::string& check, bool ok) {
  return record(check, ok ? 1.0 : 0.0, 1.0, ok ? 0.0 : 1.0, 0.0, ok);
}

SuiteResult SuiteRecorder::finish(double seconds) {
  result_.seconds = seconds;
  return result_;
}

std::uint64_t name_hash(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

SuiteResult run_suite(const Suite& suite, const RunConfig& cfg, const std::vector<WeightedGraph>* graphs) {
  const auto start = std::chrono::steady_clock::now();
  SuiteRecorder rec(suite.name, suite.description);
  const std::uint64_t base = cfg.seed ^ name_hash(suite.name);
  std::vector<WeightedGraph> own;
  if (!graphs) {
    Rng family_rng = Rng::derive(base, 0);
    own = suite.family(cfg, family_rng);
    graphs = &own;
  }
  for (std::size_t i = 0; i < graphs->size(); ++i) {
    const WeightedGraph& g = (*graphs)[i];
    if (suite.applies && !suite.applies(g)) {
      rec.skip_case();
      continue;
    }
    Rng rng = Rng::derive(base, i + 1);
    rec.begin_case(g.dense(), g.name().empty() ? "case " + std::to_string(i + 1) : g.name());
    try {
      suite.body(g, rec, cfg, rng);
    } catch (const std::exception& e) {
      rec.require(std::string("no error: ") + e.what(), false);
    }
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rec.finish(seconds);
}

std::string dense_block(const linalg::MatrixD& m) {
  std::ostringstream os;
  os << m.rows() << "\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << to_string(m(i, j));
    os << "\n";
  }
  return os.str();
}

}  // namespace jointspec::verify
