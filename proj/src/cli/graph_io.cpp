#include "jointspec/cli/graph_io.hpp"

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "jointspec/verify/suite.hpp"

namespace jointspec::cli {

namespace {

std::string strip_comment(const std::string& line) {
  const auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  std::string t;
  while (is >> t) out.push_back(t);
  return out;
}

bool parse_long(const std::string& s, long long& out) {
  errno = 0;
  char* end = nullptr;
  out = std::strtoll(s.c_str(), &end, 10);
  return errno == 0 && end != s.c_str() && *end == '\0';
}

bool parse_double(const std::string& s, double& out) {
  errno = 0;
  char* end = nullptr;
  out = std::strtod(s.c_str(), &end);
  return errno == 0 && end != s.c_str() && *end == '\0' && std::isfinite(out);
}

}  // namespace

WeightedGraph parse_edge_list(std::istream& in, const std::string& source) {
  std::map<std::pair<long long, long long>, double> weights;
  long long n = 0;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto t = tokens(strip_comment(line));
    if (t.empty()) continue;
    if (t.size() != 2 && t.size() != 3) throw ParseError(source, number, "expected 'i j' or 'i j w'");
    long long i = 0, j = 0;
    if (!parse_long(t[0], i) || !parse_long(t[1], j)) throw ParseError(source, number, "vertex ids must be integers");
    if (i <= 0 || j <= 0) throw ParseError(source, number, "vertex ids must be positive (1-based)");
    double w = 1.0;
    if (t.size() == 3 && !parse_double(t[2], w)) throw ParseError(source, number, "weight '" + t[2] + "' is not a finite number");
    weights[{std::min(i, j), std::max(i, j)}] += w;
    n = std::max({n, i, j});
  }
  if (n == 0) throw ParseError(source, 0, "no edges");
  linalg::MatrixD m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (const auto& [edge, w] : weights) {
    const auto i = static_cast<std::size_t>(edge.first - 1);
    const auto j = static_cast<std::size_t>(edge.second - 1);
    m(i, j) = w;
    m(j, i) = w;
  }
  return WeightedGraph(linalg::SymmetricMatrix(m), source);
}

WeightedGraph parse_dense(std::istream& in, const std::string& source) {
  std::string line;
  std::size_t number = 0;
  std::vector<std::pair<std::size_t, std::vector<std::string>>> rows;
  while (std::getline(in, line)) {
    ++number;
    auto t = tokens(strip_comment(line));
    if (!t.empty()) rows.emplace_back(number, std::move(t));
  }
  if (rows.empty()) throw ParseError(source, 0, "empty dense matrix file");
  long long n = 0;
  if (rows[0].second.size() != 1 || !parse_long(rows[0].second[0], n) || n <= 0)
    throw ParseError(source, rows[0].first, "first line must be the dimension n >= 1");
  if (rows.size() - 1 != static_cast<std::size_t>(n))
    throw ParseError(source, rows.back().first,
                     "expected " + std::to_string(n) + " matrix rows, found " + std::to_string(rows.size() - 1));
  const auto un = static_cast<std::size_t>(n);
  linalg::MatrixD m(un, un);
  for (std::size_t i = 0; i < un; ++i) {
    const auto& [lineno, t] = rows[i + 1];
    if (t.size() != un) throw ParseError(source, lineno, "expected " + std::to_string(n) + " entries");
    for (std::size_t j = 0; j < un; ++j)
      if (!parse_double(t[j], m(i, j))) throw ParseError(source, lineno, "entry '" + t[j] + "' is not a finite number");
  }
  for (std::size_t i = 0; i < un; ++i)
    for (std::size_t j = i + 1; j < un; ++j)
      if (std::fabs(m(i, j) - m(j, i)) > 1e-12)
        throw ParseError(source, rows[i + 1].first,
                         "matrix is not symmetric at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
  return WeightedGraph(linalg::SymmetricMatrix(m, 1e-12), source);
}

WeightedGraph parse_graph(std::istream& in, GraphFormat format, const std::string& source) {
  return format == GraphFormat::dense ? parse_dense(in, source) : parse_edge_list(in, source);
}

WeightedGraph load_graph(const std::string& path, GraphFormat format) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, 0, "cannot open file");
  return parse_graph(in, format, path);
}

GraphFormat parse_format(const std::string& name) {
  if (name == "edge") return GraphFormat::edge_list;
  if (name == "dense") return GraphFormat::dense;
  throw std::invalid_argument("unknown graph format '" + name + "' (expected edge or dense)");
}

std::string dump_dense(const WeightedGraph& g) { return verify::dense_block(g.dense()); }

std::string dump_edge_list(const WeightedGraph& g) {
  std::ostringstream os;
  os << "# " << g.size() << " vertices\n";
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i; j < g.size(); ++j)
      if (g(i, j) != 0.0) os << i + 1 << " " << j + 1 << " " << to_string(g(i, j)) << "\n";
  return os.str();
}

}  // namespace jointspec::cli
