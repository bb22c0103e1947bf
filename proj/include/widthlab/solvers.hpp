#pragma once

#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "widthlab/branchdec.hpp"
#include "widthlab/graph.hpp"

namespace widthlab {

using Rational = boost::multiprecision::cpp_rational;

struct WeightedInstance {
  Graph graph;
  std::vector<Rational> weights;  // one non-negative weight per vertex
};

WeightedInstance unit_weights(const Graph& g);

struct MwisResult {
  VertexSet set;
  Rational weight;
};

// Branch and bound with a greedy clique-cover bound.
MwisResult mwis_oracle(const WeightedInstance& inst);

struct DpStats {
  std::size_t max_classes = 0;  // largest signature table over all cuts
  std::vector<std::size_t> classes_per_node;
};

// Dynamic program over the decomposition rooted at a node subdividing its
// lowest edge. For every cut it keys partial solutions S below by N(S) across
// the cut and the constraint from above by a union of neighbourhoods of
// vertices outside; the number of keys is polynomial for bounded mim-width.
MwisResult mwis_mim_dp(const WeightedInstance& inst, const BranchDecomposition& bd,
                       DpStats* stats = nullptr);

bool is_independent(const Graph& g, std::span<const Vertex> s);

struct ListAssignment {
  std::size_t k = 0;
  std::vector<std::vector<int>> lists;  // lists[v] subset of 1..k
};

// Throws std::invalid_argument for malformed lists.
void validate(const Graph& g, const ListAssignment& l);
// Backtracking on the vertex with the fewest remaining colours, with forward
// checking. Returns a colour per vertex or nothing when infeasible.
std::optional<std::vector<int>> list_colouring_oracle(const Graph& g, const ListAssignment& l);
bool verify_colouring(const Graph& g, const ListAssignment& l, const std::vector<int>& c);

std::size_t simwidth_oracle(const Graph& g, std::optional<std::size_t> cap = {});

}  // namespace widthlab
