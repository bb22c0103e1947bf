#pragma once

// Slow, obviously-correct reference implementations. Nothing here shares
// search code with the library.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "widthlab/branchdec.hpp"
#include "widthlab/graph.hpp"
#include "widthlab/solvers.hpp"

namespace oracle {

using widthlab::Bitset;
using widthlab::Edge;
using widthlab::Graph;
using widthlab::Vertex;

// Tries every injective map of pattern vertices into g.
bool contains_induced(const Graph& g, const Graph& pattern);

std::size_t max_induced_matching(const Graph& g, const Bitset& x, const Bitset& y, bool sim);

// Width by dynamic programming over vertex subsets (no tree enumeration).
std::size_t width_by_subsets(const Graph& g, bool sim);

std::size_t independence_number(const Graph& g);
std::size_t clique_number(const Graph& g);

// Weights as integers; returns the optimum.
std::int64_t mwis(const Graph& g, const std::vector<std::int64_t>& w);

// lists[v] as a bitmask over colours 1..k (bit c-1).
bool list_colourable(const Graph& g, const std::vector<std::uint32_t>& lists);

bool almost_complete(const Graph& g, const std::vector<Vertex>& a, const std::vector<Vertex>& b,
                     std::size_t threshold);

// Subgraphs of g isomorphic to a pattern, found by trying every edge subset of
// every induced subgraph of pattern order. Sorted, without duplicates.
std::vector<std::pair<widthlab::VertexSet, std::vector<Edge>>> occurrences(
    const Graph& g, const std::vector<Graph>& patterns);
// Heaviest set of pairwise disjoint, anticomplete occurrences.
widthlab::Rational best_packing(const Graph& g,
                                const std::vector<std::pair<widthlab::VertexSet, std::vector<Edge>>>& occ,
                                const std::vector<widthlab::Rational>& w);

// Random graph with edge probability p.
Graph random_graph(std::size_t n, double p, std::mt19937_64& rng);
// Random valid decomposition: random ternary tree with random leaf labels.
widthlab::BranchDecomposition random_decomposition(std::size_t n, std::mt19937_64& rng);

}  // namespace oracle
