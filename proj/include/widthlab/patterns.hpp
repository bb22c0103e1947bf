#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "widthlab/graph.hpp"

namespace widthlab {

namespace pattern {
struct Clique { std::size_t r; };
struct Edgeless { std::size_t r; };
// sP1 + tP2 + uP3
struct LinearForest { std::size_t s, t, u; };
// complement of K_{s,t} + P1
struct CoBicliquePlusUniversal { std::size_t s, t; };
// 1-subdivision of K_{1,s}
struct SubdividedStar { std::size_t s; };
// two K_t joined by a perfect matching
struct MatchedCliques { std::size_t t; };
// K_t and an independent t-set joined by a perfect matching
struct MatchedCliqueStable { std::size_t t; };
struct Explicit {
  Graph graph;
  std::string name;
};
}  // namespace pattern

struct PatternSpec {
  std::variant<pattern::Clique, pattern::Edgeless, pattern::LinearForest,
               pattern::CoBicliquePlusUniversal, pattern::SubdividedStar,
               pattern::MatchedCliques, pattern::MatchedCliqueStable, pattern::Explicit>
      kind;
};

// Numbering:
//   LinearForest: P3 components (end, middle, end), then P2s, then P1s.
//   CoBicliquePlusUniversal(s,t): 0 universal, 1..s and s+1..s+t the cliques.
//   SubdividedStar(s): 0 centre, i in 1..s middles, s+i the leaf below i.
//   Matched*(t): 0..t-1 the clique, t..2t-1 the other side, i matched to t+i.
Graph realize(const PatternSpec& p);

// Grammar (terms joined by '+', all counts decimal):
//   K<r>  <c>P<k>  co(K[<s>,<t>]+P1)  K<t>boxK<t>  K<t>boxS<t>  K1-<s>-subdiv
//   C<n>  K[<s>,<t>]
// Sums of paths are linear forests; the printer emits the canonical form.
PatternSpec parse_pattern(std::string_view text);
std::vector<PatternSpec> parse_pattern_list(std::string_view text);  // comma separated
std::string to_string(const PatternSpec& p);

using Embedding = std::vector<Vertex>;  // pattern vertex -> host vertex

std::optional<Embedding> contains_induced(const Graph& g, const Graph& pattern);
std::optional<Embedding> contains_induced(const Graph& g, const PatternSpec& p);

// Places induced P3s, P2s and P1s one component at a time. Independent of
// contains_induced; used to cross-check it.
std::optional<Embedding> find_linear_forest(const Graph& g, std::size_t s, std::size_t t,
                                            std::size_t u);

struct FreenessVerdict {
  bool free = true;
  std::size_t pattern_index = 0;  // first pattern that embeds
  Embedding witness;
};
FreenessVerdict is_free(const Graph& g, std::span<const PatternSpec> ps);

// Re-checks every pair of pattern vertices against the host.
bool verify_embedding(const Graph& g, const Graph& pattern, std::span<const Vertex> phi);

std::vector<Vertex> maximum_clique(const Graph& g);
std::vector<Vertex> maximum_independent_set(const Graph& g);
std::size_t clique_number(const Graph& g);
std::size_t independence_number(const Graph& g);

}  // namespace widthlab
