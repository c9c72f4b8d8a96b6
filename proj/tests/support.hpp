#pragma once

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "jointspec/graph.hpp"

namespace testing {

using jointspec::Rational;
using jointspec::WeightedGraph;

inline WeightedGraph P2() { return jointspec::graphs::path(2); }
inline WeightedGraph P3() { return jointspec::graphs::path(3); }
inline WeightedGraph K3() { return jointspec::graphs::complete(3); }
inline WeightedGraph K4() { return jointspec::graphs::complete(4); }
inline WeightedGraph D35() { return jointspec::graphs::diagonal({3.0, 5.0}); }

inline Rational q(const std::string& s) {
  Rational r(s);
  r.canonicalize();
  return r;
}

/// Frozen reference values: `key: v v v` or `key: row ; row`.
class OracleTable {
 public:
  OracleTable() {
    std::ifstream in(JOINTSPEC_ORACLE_TABLE);
    if (!in) throw std::runtime_error("cannot open " + std::string(JOINTSPEC_ORACLE_TABLE));
    std::string line;
    while (std::getline(in, line)) {
      const auto colon = line.find(": ");
      if (colon != std::string::npos) values_[line.substr(0, colon)] = line.substr(colon + 2);
    }
  }

  std::vector<Rational> row(const std::string& key) const {
    std::vector<Rational> out;
    std::istringstream is(at(key));
    std::string tok;
    while (is >> tok)
      if (tok != ";") out.push_back(q(tok));
    return out;
  }
  Rational scalar(const std::string& key) const {
    const auto r = row(key);
    if (r.size() != 1) throw std::runtime_error(key + " is not a scalar");
    return r.front();
  }
  jointspec::linalg::RationalMatrix matrix(const std::string& key) const {
    std::vector<std::vector<Rational>> rows(1);
    std::istringstream is(at(key));
    std::string tok;
    while (is >> tok) {
      if (tok == ";") rows.emplace_back();
      else rows.back().push_back(q(tok));
    }
    jointspec::linalg::RationalMatrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
    return m;
  }

 private:
  const std::string& at(const std::string& key) const {
    auto it = values_.find(key);
    if (it == values_.end()) throw std::runtime_error("missing oracle key: " + key);
    return it->second;
  }
  std::map<std::string, std::string> values_;
};

inline const OracleTable& oracle() {
  static const OracleTable table;
  return table;
}

}  // namespace testing
