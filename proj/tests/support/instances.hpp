#pragma once
// Random and structured inputs for the certified constructions.

#include <optional>
#include <random>
#include <vector>

#include "widthlab/graph.hpp"

namespace instances {

// Adds random edges in random order, skipping any edge that creates a K_k.
widthlab::Graph random_clique_free(std::size_t n, std::size_t k, double p, std::mt19937_64& rng);

// Complement of a K_k-free graph, kept only when it avoids co(K_{s,t}+P1).
std::optional<widthlab::Graph> sample(std::size_t n, std::size_t k, std::size_t s, std::size_t t,
                                      std::mt19937_64& rng);

// Complements of named K_k-free graphs (cycles, paths, grids, bicliques,
// multipartite graphs with small parts) on at most max_n vertices. Not
// filtered for the second pattern.
std::vector<widthlab::Graph> structured(std::size_t k, std::size_t max_n);

}  // namespace instances
