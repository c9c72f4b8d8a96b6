#pragma once

#include <vector>

#include "jointspec/graph.hpp"

namespace jointspec::verify {

/// Random symmetric integer matrices (loops allowed) with n in [nmin, nmax].
std::vector<WeightedGraph> random_integer_graphs(std::size_t count, std::size_t nmin, std::size_t nmax, int lo, int hi,
                                                 Rng& rng);

/// Random loopless 0/1 graphs G(n, p) with n in [nmin, nmax] and p in [0.3, 0.8].
std::vector<WeightedGraph> random_simple_graphs(std::size_t count, std::size_t nmin, std::size_t nmax, Rng& rng);

/// Paths, cycles, complete graphs, stars and a few seeded random graphs on at most n_max vertices.
std::vector<WeightedGraph> small_graph_family(std::size_t n_max, Rng& rng);

/// Nonempty subset of {0..n-1} of size at most max_size, sorted.
std::vector<int> random_subset(std::size_t n, std::size_t max_size, Rng& rng);

/// All subsets of {0..n-1} of the given size, in lexicographic order.
std::vector<std::vector<int>> subsets_of_size(std::size_t n, std::size_t size);

/// All nonempty subsets of {0..n-1} (bitmask order).
std::vector<std::vector<int>> nonempty_subsets(std::size_t n);

std::string subset_str(std::span<const int> u);

}  // namespace jointspec::verify
