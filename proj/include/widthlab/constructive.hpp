#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "widthlab/branchdec.hpp"
#include "widthlab/graph.hpp"

namespace widthlab {

using BigInt = boost::multiprecision::cpp_int;

enum class RamseyProvenance { exact_table, binomial_upper };

struct RamseyBound {
  std::size_t r = 0, s = 0;
  BigInt value;
  RamseyProvenance provenance = RamseyProvenance::exact_table;
};

// Exact value for the embedded table of known small Ramsey numbers, otherwise
// C(r+s-2, r-1). Throws std::invalid_argument for r or s below 1.
RamseyBound ramsey(std::size_t r, std::size_t s);
std::string to_string(RamseyProvenance p);

// True iff at most two vertices of a have at least `threshold` non-neighbours
// in b. Throws std::invalid_argument when a and b overlap.
bool almost_complete(const Graph& g, std::span<const Vertex> a, std::span<const Vertex> b,
                     std::size_t threshold);

struct Partition33 {
  Vertex v_a = 0, v_b = 0;
  VertexSet s_a, s_b, s_ab, s_z;
};
// Uses the first non-adjacent pair in lexicographic order; empty when g is
// complete. Throws PreconditionFailed if some vertex misses both v_a and v_b.
std::optional<Partition33> partition_33(const Graph& g);

// Classes are indexed by a bitmask over {a, b, c} (bit 0 = a, 1 = b, 2 = c).
struct Partition42 {
  std::array<Vertex, 3> v{};
  std::array<VertexSet, 8> s;  // s[0] unused
  VertexSet s_z;
  // star[x]: vertices of the pair class avoiding x with at least two
  // neighbours in the singleton class of x.
  std::array<VertexSet, 3> star;
};
// First pairwise non-adjacent triple in lexicographic order; empty when there
// is none. Throws PreconditionFailed if some vertex misses all three.
std::optional<Partition42> partition_42(const Graph& g);

enum class ConstructionCase { complete, good, bad, delegated, general };
std::string to_string(ConstructionCase c);

struct ConstructOptions {
  bool verify_freeness = true;  // check the forbidden patterns first
  bool check_claims = true;     // evaluate every cut against the proof's bounds
};

struct CertifiedDecomposition {
  BranchDecomposition bd;
  ConstructionCase construction = ConstructionCase::general;
  std::string formula;
  RamseyBound ramsey;
  BigInt certificate;  // strict upper bound on the mim-width of bd
  std::optional<std::size_t> evaluated_mimw;
  std::size_t claims_checked = 0;
};

// For (3P1, co(K_{3,t}+P1))-free graphs, t >= 4.
CertifiedDecomposition decompose_3p1(const Graph& g, std::size_t t, ConstructOptions opt = {});
// For (4P1, co(K_{2,t}+P1))-free graphs, t >= 4.
CertifiedDecomposition decompose_4p1(const Graph& g, std::size_t t, ConstructOptions opt = {});

}  // namespace widthlab
