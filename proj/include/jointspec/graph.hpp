#pragma once

#include <string>
#include <vector>

#include "jointspec/linalg/symmetric.hpp"
#include "jointspec/random.hpp"

namespace jointspec {

/// Symmetric weight matrix with the flags the identity checks branch on.
class WeightedGraph {
 public:
  WeightedGraph() = default;
  explicit WeightedGraph(linalg::SymmetricMatrix weights, std::string name = {});

  std::size_t size() const { return w_.size(); }
  const linalg::SymmetricMatrix& weights() const { return w_; }
  const linalg::MatrixD& dense() const { return w_.dense(); }
  double operator()(std::size_t i, std::size_t j) const { return w_(i, j); }
  const std::string& name() const { return name_; }

  bool loopless() const { return loopless_; }
  /// 0/1 weights and no loops.
  bool simple() const { return simple_; }
  bool integral() const { return w_.is_integral(); }

  /// Weight matrix over T (exact conversion for Rational).
  template <class T>
  linalg::Matrix<T> matrix() const {
    return linalg::convert<T>(w_.dense());
  }

  std::vector<int> neighbors(int v) const;
  /// Degree minus adjacency.
  linalg::MatrixD laplacian() const;
  /// Subgraph induced on `vertices` (relabelled in the given order).
  WeightedGraph induced(std::span<const int> vertices) const;

  friend bool operator==(const WeightedGraph& a, const WeightedGraph& b) { return a.w_ == b.w_; }

 private:
  linalg::SymmetricMatrix w_;
  std::string name_;
  bool loopless_ = true;
  bool simple_ = true;
};

namespace graphs {

WeightedGraph from_edges(std::size_t n, const std::vector<std::pair<int, int>>& edges, std::string name = {});
WeightedGraph empty(std::size_t n);
WeightedGraph path(std::size_t n);
WeightedGraph cycle(std::size_t n);
WeightedGraph complete(std::size_t n);
/// K_{1,leaves}; vertex 0 is the center.
WeightedGraph star(std::size_t leaves);
WeightedGraph gnp(std::size_t n, double p, Rng& rng);
WeightedGraph disjoint_union(const WeightedGraph& a, const WeightedGraph& b);
WeightedGraph diagonal(const std::vector<double>& values);

/// Random symmetric integer matrix with entries in [lo, hi] (loops allowed).
linalg::SymmetricMatrix random_integer_symmetric(std::size_t n, int lo, int hi, Rng& rng);

/// Parses a generator spec such as "path:4", "cycle:5", "complete:3", "star:3", "gnp:6:0.5".
WeightedGraph from_spec(const std::string& spec, Rng& rng);

}  // namespace graphs
}  // namespace jointspec
