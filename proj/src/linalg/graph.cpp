#include "jointspec/graph.hpp"

#include <sstream>
#include <stdexcept>

namespace jointspec {

WeightedGraph::WeightedGraph(linalg::SymmetricMatrix weights, std::string name)
    : w_(std::move(weights)), name_(std::move(name)) {
  const std::size_t n = w_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (w_(i, i) != 0.0) loopless_ = false;
    for (std::size_t j = 0; j < n; ++j) {
      const double x = w_(i, j);
      if (x != 0.0 && x != 1.0) simple_ = false;
    }
  }
  if (!loopless_) simple_ = false;
}

std::vector<int> WeightedGraph::neighbors(int v) const {
  std::vector<int> out;
  for (std::size_t j = 0; j < size(); ++j)
    if (w_(static_cast<std::size_t>(v), j) != 0.0) out.push_back(static_cast<int>(j));
  return out;
}

linalg::MatrixD WeightedGraph::laplacian() const {
  const std::size_t n = size();
  linalg::MatrixD l(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    double deg = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      deg += w_(i, j);
      l(i, j) = -w_(i, j);
    }
    l(i, i) = deg;
  }
  return l;
}

WeightedGraph WeightedGraph::induced(std::span<const int> vertices) const {
  if (vertices.empty()) throw std::invalid_argument("induced subgraph needs at least one vertex");
  return WeightedGraph(linalg::SymmetricMatrix(linalg::principal_submatrix(w_.dense(), vertices)));
}

namespace graphs {

WeightedGraph from_edges(std::size_t n, const std::vector<std::pair<int, int>>& edges, std::string name) {
  linalg::MatrixD m(n, n);
  for (auto [i, j] : edges) {
    m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = 1.0;
    m(static_cast<std::size_t>(j), static_cast<std::size_t>(i)) = 1.0;
  }
  return WeightedGraph(linalg::SymmetricMatrix(m), std::move(name));
}

WeightedGraph empty(std::size_t n) { return from_edges(n, {}, "E" + std::to_string(n)); }

WeightedGraph path(std::size_t n) {
  std::vector<std::pair<int, int>> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(static_cast<int>(i), static_cast<int>(i + 1));
  return from_edges(n, e, "P" + std::to_string(n));
}

WeightedGraph cycle(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle graph needs at least 3 vertices");
  std::vector<std::pair<int, int>> e;
  for (std::size_t i = 0; i < n; ++i) e.emplace_back(static_cast<int>(i), static_cast<int>((i + 1) % n));
  return from_edges(n, e, "C" + std::to_string(n));
}

WeightedGraph complete(std::size_t n) {
  std::vector<std::pair<int, int>> e;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) e.emplace_back(static_cast<int>(i), static_cast<int>(j));
  return from_edges(n, e, "K" + std::to_string(n));
}

WeightedGraph star(std::size_t leaves) {
  std::vector<std::pair<int, int>> e;
  for (std::size_t i = 1; i <= leaves; ++i) e.emplace_back(0, static_cast<int>(i));
  return from_edges(leaves + 1, e, "S" + std::to_string(leaves));
}

WeightedGraph gnp(std::size_t n, double p, Rng& rng) {
  std::vector<std::pair<int, int>> e;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rng.bernoulli(p)) e.emplace_back(static_cast<int>(i), static_cast<int>(j));
  std::ostringstream name;
  name << "G(" << n << "," << p << ")";
  return from_edges(n, e, name.str());
}

WeightedGraph disjoint_union(const WeightedGraph& a, const WeightedGraph& b) {
  const std::size_t n = a.size() + b.size();
  linalg::MatrixD m(n, n);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) m(a.size() + i, a.size() + j) = b(i, j);
  return WeightedGraph(linalg::SymmetricMatrix(m), a.name() + "+" + b.name());
}

WeightedGraph diagonal(const std::vector<double>& values) {
  linalg::MatrixD m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return WeightedGraph(linalg::SymmetricMatrix(m), "diag");
}

linalg::SymmetricMatrix random_integer_symmetric(std::size_t n, int lo, int hi, Rng& rng) {
  linalg::MatrixD m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const auto v = static_cast<double>(rng.uniform_int(lo, hi));
      m(i, j) = m(j, i) = v;
    }
  return linalg::SymmetricMatrix(m);
}

WeightedGraph from_spec(const std::string& spec, Rng& rng) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  for (std::string tok; std::getline(ss, tok, ':');) parts.push_back(tok);
  auto count = [&](std::size_t idx) -> std::size_t {
    if (parts.size() <= idx) throw std::invalid_argument("generator '" + spec + "' is missing a size");
    const long v = std::stol(parts[idx]);
    if (v <= 0) throw std::invalid_argument("generator size must be positive");
    return static_cast<std::size_t>(v);
  };
  const std::string& kind = parts.empty() ? spec : parts[0];
  if (kind == "path") return path(count(1));
  if (kind == "cycle") return cycle(count(1));
  if (kind == "complete") return complete(count(1));
  if (kind == "star") return star(count(1));
  if (kind == "empty") return empty(count(1));
  if (kind == "gnp") {
    if (parts.size() < 3) throw std::invalid_argument("gnp generator needs gnp:N:P");
    return gnp(count(1), std::stod(parts[2]), rng);
  }
  throw std::invalid_argument("unknown graph generator '" + kind + "'");
}

}  // namespace graphs
}  // namespace jointspec
