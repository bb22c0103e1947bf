#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "widthlab/branchdec.hpp"
#include "widthlab/constructive.hpp"
#include "widthlab/graph.hpp"
#include "widthlab/solvers.hpp"

namespace widthlab {

enum class Verdict { bounded, unbounded, open };
std::string to_string(Verdict v);

struct ClassificationOutcome {
  Verdict verdict = Verdict::open;
  std::string bullet;  // e.g. "edgeless/r3-bounded"
  bool quickly_computable = false;
  // For unbounded verdicts the generator family whose members lie in the
  // class; for bounded edgeless verdicts the certified construction.
  std::string evidence;
};

// (rP1, co(K_{s,t}+P1))-free graphs; r >= 3, s, t >= 2.
ClassificationOutcome classify_edgeless(std::size_t r, std::size_t s, std::size_t t);

struct LinearForestCounts {
  std::size_t s = 0, t = 0, u = 0;  // sP1 + tP2 + uP3
};
// Induced containment of small in big, decided by packing components.
bool linear_forest_contains(LinearForestCounts big, LinearForestCounts small);

// (K_r, sP1+tP2+uP3)-free graphs; r >= 4.
ClassificationOutcome classify_complete(std::size_t r, LinearForestCounts h);

struct CliqueFreeBound {
  BigInt value;
  std::vector<RamseyBound> chain;  // R(w+1,t), R(t,t), then the outer value
};
// Mim-width bound R(R(w+1,t), R(t,t)) for a decomposition of sim-width w of a
// graph without the two matched-clique patterns of order t. Throws
// CapExceeded when an inner value is too large to feed back in.
CliqueFreeBound cliquefree_bound(std::size_t w, std::size_t t);

struct PipelineResult {
  bool feasible = false;
  std::optional<std::vector<int>> colouring;
  std::vector<Vertex> clique;  // a K_{k+1} when that settles infeasibility
  std::size_t simw = 0;
  std::optional<CliqueFreeBound> mim_bound;  // absent when the clique test answers
  std::string note;
};

// Clique test, then the width bound for the report, then the exact oracle.
PipelineResult list_colouring_pipeline(const Graph& g, const ListAssignment& lists,
                                       const BranchDecomposition& bd);

}  // namespace widthlab
