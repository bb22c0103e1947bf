#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "widthlab/graph.hpp"
#include "widthlab/patterns.hpp"

namespace widthlab {

// Grid-derived graphs carry 1-based "(i,j)" labels; vertices are numbered in
// lexicographic (i,j) order.
using Coordinate = std::pair<int, int>;
std::vector<Coordinate> coordinates(const Graph& g);  // parses the labels

struct ColouredGraph {
  Graph graph;
  std::vector<int> colouring;  // class index per vertex
};

// The h x 2r grid with row i, column j; the vertical edge below (i,j) is kept
// iff i and j have the same parity, then degree-1 vertices are removed.
Graph elementary_wall(std::size_t h, std::size_t r);

// k = 2: (i+j) mod 2; k = 3: (i+j) mod 3; k = 4: (2i+j) mod 4.
ColouredGraph wall_colouring(const Graph& wall, int k);
// Makes every colour class a clique. Throws std::invalid_argument when the
// colouring is not proper.
Graph complete_colour_classes(const ColouredGraph& cg);
// f(W), g(W), h(W) for k = 2, 3, 4.
Graph completed_wall(std::size_t h, std::size_t r, int k);

// 2n x 2n grid on (i,j) without the edges (i,j)(i,j-1) for i+j odd.
Graph wn_graph(std::size_t n);
// W_n with classes A..F (0..5): parity of i+j, then i mod 3 as 1, 2, 0.
ColouredGraph wn_classes(std::size_t n);
// A, B, C pairwise complete and D, E, F pairwise complete.
Graph w5_family(std::size_t n);
// W_n with every edge subdivided and coordinates doubled, classes X, Y, A,
// B, C (0..4).
ColouredGraph w4_base(std::size_t n);
// X complete to Y; distinct classes among A, B, C joined unless the two
// vertices share j and their i differ by 2.
Graph w4_family(std::size_t n);

struct FreenessClaim {
  std::string claim;
  PatternSpec pattern;
};

struct ClaimVerdict {
  std::string claim;
  bool holds = true;
  Embedding witness;
};

// Families: wall, fW, gW, hW, wn, w5, w4. Parameters: (h, r) for walls and
// their completions, (n) for the rest.
Graph generate_family(std::string_view family, const std::vector<std::size_t>& params);
std::vector<FreenessClaim> freeness_suite(std::string_view family);
std::vector<ClaimVerdict> verify_family(std::string_view family, const Graph& g);

// Same-class vertices of A, B, C in w4_base(n) differ in i by a multiple of
// 3, and by an even amount in j when i agrees.
bool residue_properties_hold(const ColouredGraph& base);

}  // namespace widthlab
