#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "widthlab/branchdec.hpp"
#include "widthlab/graph.hpp"
#include "widthlab/solvers.hpp"

namespace widthlab {

// A subgraph of the host isomorphic to one of the patterns: its vertex set
// and the host edges used by the copy.
struct Occurrence {
  std::size_t pattern = 0;
  VertexSet vertices;
  std::vector<Edge> edges;  // sorted host edges, each (u, v) with u < v
};

struct OccurrenceIndex {
  std::vector<Graph> patterns;
  std::vector<Occurrence> occurrences;
  std::vector<Vertex> anchor;                     // smallest vertex of each occurrence
  std::vector<std::vector<std::size_t>> groups;  // groups[v]: occurrences anchored at v
};

struct HGraphResult {
  Graph hgraph;  // vertex i is occurrence i
  OccurrenceIndex index;
};

constexpr std::size_t default_pattern_cap = 4;

// Enumerates every vertex subset of pattern size and every bijection onto it.
// Occurrences are ordered by pattern, then vertex set, then edge set; copies
// already produced by an earlier isomorphic pattern are skipped. Throws
// std::invalid_argument for null or disconnected patterns and CapExceeded
// for patterns above the cap.
HGraphResult build_hgraph(const Graph& g, std::span<const Graph> patterns,
                          std::size_t cap = default_pattern_cap);

// Hangs a caterpillar of F(v) below the leaf of every vertex v with F(v)
// non-empty and trims the remaining leaves afterwards. Requires more than one
// occurrence.
BranchDecomposition transfer_decomposition(const Graph& g, const BranchDecomposition& bd,
                                           const HGraphResult& hg);

struct Packing {
  std::vector<std::size_t> occurrences;  // sorted occurrence ids
  Rational weight;
};

// Maximum-weight independent set of the H-graph. Weights default to 1 and
// must be positive, one per occurrence. With a decomposition of the H-graph
// the mim-width dynamic program is used, otherwise the exact oracle.
Packing solve_packing(const HGraphResult& hg, std::optional<std::vector<Rational>> weights = {},
                      const BranchDecomposition* hgraph_bd = nullptr);
Packing solve_packing(const Graph& g, std::span<const Graph> patterns,
                      std::optional<std::vector<Rational>> weights = {});

// Pairwise disjoint and anticomplete, each occurrence a genuine copy of its
// pattern inside g.
bool verify_packing(const Graph& g, const HGraphResult& hg, const Packing& p);

}  // namespace widthlab
