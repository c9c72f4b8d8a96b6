#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jointspec/graph.hpp"

namespace jointspec::verify {

/// Seed, trial count, truncation and tolerance overrides for a verification run.
struct RunConfig {
  std::uint64_t seed = 1;
  /// Random cases per suite; 0 selects each suite's own default.
  std::size_t trials = 0;
  /// Series truncation degree for the hike suites.
  unsigned truncation = 8;
  std::map<std::string, double> tolerances;

  /// Override when present, else the built-in default. Throws on unknown names.
  double tol(const std::string& name) const;
  std::size_t trials_or(std::size_t fallback) const { return trials ? trials : fallback; }
};

/// Built-in tolerance table (name -> default).
const std::map<std::string, double>& default_tolerances();

/// First failing check of a suite, with the matrix needed to replay it.
struct Counterexample {
  std::string check;
  std::string detail;
  linalg::MatrixD matrix;
  double lhs = 0.0;
  double rhs = 0.0;
  double tol = 0.0;
};

/// The check with the largest gap relative to its tolerance.
struct WorstCheck {
  std::string check;
  double lhs = 0.0;
  double rhs = 0.0;
  double gap = 0.0;
  double tol = 0.0;
};

struct SuiteResult {
  std::string name;
  std::string description;
  std::size_t cases = 0;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::size_t skipped = 0;
  std::optional<WorstCheck> worst;
  std::optional<Counterexample> counterexample;
  std::vector<std::string> notes;
  double seconds = 0.0;

  bool pass() const { return failures == 0; }
};

/// Accumulates checks for one suite. Each case sets the matrix and detail that
/// a counterexample will report.
class SuiteRecorder {
 public:
  SuiteRecorder(std::string name, std::string description);

  void begin_case(const linalg::MatrixD& matrix, std::string detail);
  void skip_case() { ++result_.skipped; }
  /// Refines the current case detail (subset, index, ...) for later checks.
  void detail(const std::string& extra);
  /// Replaces the replay matrix of the current case.
  void set_matrix(const linalg::MatrixD& matrix);

  /// |lhs - rhs| <= tol.
  bool close(const std::string& check, double lhs, double rhs, double tol);
  /// |lhs - rhs| <= tol * max(1, |rhs|).
  bool close_relative(const std::string& check, double lhs, double rhs, double tol);
  bool exact(const std::string& check, const Rational& lhs, const Rational& rhs);
  bool require(const std::string& check, bool ok);
  void note(std::string line) { result_.notes.push_back(std::move(line)); }

  SuiteResult finish(double seconds);

 private:
  bool record(const std::string& check, double lhs, double rhs, double gap, double tol, bool ok);

  SuiteResult result_;
  linalg::MatrixD matrix_;
  std::string case_name_;
  std::string detail_;
  double worst_ratio_ = -1.0;
};

/// A named identity check run over a family of graphs.
struct Suite {
  std::string name;
  std::string module;
  std::string description;
  /// Default number of random cases (0 for fixed families).
  std::size_t default_trials = 0;
  /// False for suites tied to their own fixed inputs; they are not run on user graphs.
  bool accepts_graph = true;
  /// Random or fixed family of inputs.
  std::function<std::vector<WeightedGraph>(const RunConfig&, Rng&)> family;
  /// False when the identity does not apply to the graph (the case is skipped).
  std::function<bool(const WeightedGraph&)> applies;
  std::function<void(const WeightedGraph&, SuiteRecorder&, const RunConfig&, Rng&)> body;
};

/// Runs `suite` over its own family, or over `graphs` when given. Every case
/// draws from its own stream derived from (seed, suite, case index).
SuiteResult run_suite(const Suite& suite, const RunConfig& cfg, const std::vector<WeightedGraph>* graphs = nullptr);

/// Dense-format block of a matrix, readable by the graph parser.
std::string dense_block(const linalg::MatrixD& m);

std::uint64_t name_hash(const std::string& s);

}  // namespace jointspec::verify
