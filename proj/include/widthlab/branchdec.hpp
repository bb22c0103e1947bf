#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "widthlab/graph.hpp"

namespace widthlab {

using Node = std::uint32_t;
using TreeEdge = std::pair<Node, Node>;

// Mutable unrooted tree used while building decompositions. Node ids are
// never reused; removed nodes stay as tombstones until finalize().
class Tree {
 public:
  Node add_node();
  void add_edge(Node a, Node b);
  void remove_edge(Node a, Node b);
  void remove_node(Node v);
  // Inserts a new node in the middle of edge ab and returns it.
  Node subdivide(Node a, Node b);

  bool alive(Node v) const { return v < alive_.size() && alive_[v]; }
  std::size_t capacity() const { return adj_.size(); }
  std::size_t node_count() const;
  std::size_t degree(Node v) const { return adj_[v].size(); }
  const std::vector<Node>& neighbours(Node v) const { return adj_[v]; }
  bool has_edge(Node a, Node b) const;

  void set_vertex(Node v, std::optional<Vertex> x) { label_[v] = x; }
  std::optional<Vertex> vertex(Node v) const { return label_[v]; }

 private:
  std::vector<std::vector<Node>> adj_;
  std::vector<char> alive_;
  std::vector<std::optional<Vertex>> label_;
};

// Trimming: deletes the path from leaf v up to, but excluding, the nearest
// node of degree at least 3. Throws if the tree is a bare path.
Tree trim_leaf(Tree t, Node v);

// Subcubic tree with a bijection from host vertices 0..n-1 onto its leaves.
// Internal degree-2 nodes are allowed and reported as subdivision nodes.
class BranchDecomposition {
 public:
  // Validates every structural invariant; throws std::invalid_argument.
  BranchDecomposition(std::size_t node_count, std::vector<TreeEdge> edges,
                      std::vector<std::pair<Node, Vertex>> leaf_map);

  std::size_t node_count() const noexcept { return adj_.size(); }
  std::size_t vertex_count() const noexcept { return leaf_.size(); }
  const std::vector<TreeEdge>& edges() const noexcept { return edges_; }
  const std::vector<Node>& neighbours(Node v) const { return adj_[v]; }
  std::optional<Vertex> vertex_at(Node v) const { return at_[v]; }
  Node leaf_of(Vertex x) const { return leaf_[x]; }
  const std::vector<Node>& subdivision_nodes() const noexcept { return subdivision_; }

  friend bool operator==(const BranchDecomposition& a, const BranchDecomposition& b) {
    return a.edges_ == b.edges_ && a.leaf_ == b.leaf_ && a.adj_.size() == b.adj_.size();
  }

 private:
  std::vector<TreeEdge> edges_;
  std::vector<std::vector<Node>> adj_;
  std::vector<std::optional<Vertex>> at_;
  std::vector<Node> leaf_;
  std::vector<Node> subdivision_;
};

// Compacts live nodes (keeping their relative order) into a decomposition.
BranchDecomposition finalize(const Tree& t);
Tree to_tree(const BranchDecomposition& bd);
// Rewrites leaf labels: vertex x becomes map[x].
BranchDecomposition relabel(const BranchDecomposition& bd, std::span<const Vertex> map);

struct Cut {
  TreeEdge edge;
  Bitset side_a;  // leaves on the edge.first side
  Bitset side_b;
};

Cut cut_of_edge(const BranchDecomposition& bd, TreeEdge e);
std::vector<Cut> all_cuts(const BranchDecomposition& bd);

enum class WidthKind { mim, sim };

// Maximum induced matching with one end in x and the other in y (disjoint).
// mim ignores edges inside x and inside y; sim does not.
std::vector<Edge> max_induced_matching(const Graph& g, const Bitset& x, const Bitset& y,
                                       WidthKind kind);
std::size_t cut_value(const Graph& g, const Bitset& x, const Bitset& y, WidthKind kind);

struct CutWidths {
  std::size_t cutmim = 0;
  std::size_t cutsim = 0;
};
CutWidths cut_widths(const Graph& g, const Cut& c);

struct WidthReport {
  std::vector<CutWidths> per_edge;  // aligned with bd.edges()
  std::size_t mimw = 0;
  std::size_t simw = 0;
};
WidthReport evaluate(const Graph& g, const BranchDecomposition& bd);
std::size_t evaluate_width(const Graph& g, const BranchDecomposition& bd, WidthKind kind);

struct ExactWidth {
  std::size_t width;
  BranchDecomposition witness;
};
constexpr std::size_t default_exact_cap = 9;
// Cap comes from WIDTHLAB_EXACT_CAP when set, else default_exact_cap.
std::size_t exact_cap_from_env();
ExactWidth exact_width(const Graph& g, WidthKind kind, std::optional<std::size_t> cap = {});

struct CaterpillarNodes {
  std::vector<Node> backbone;  // s_1..s_l
  std::vector<Node> leaves;    // t_1..t_l
};
// Adds an l-caterpillar to t; labels, when given, are put on the leaves.
CaterpillarNodes add_caterpillar(Tree& t, std::size_t length, std::span<const Vertex> labels);

// Backbone s_1..s_l, leaf t_i holding order[i]. Two vertices give one edge.
BranchDecomposition caterpillar_decomposition(std::span<const Vertex> order);
BranchDecomposition caterpillar_decomposition(const Graph& g, std::span<const Vertex> order);
BranchDecomposition caterpillar_decomposition(const Graph& g);  // identity order

// Adds host vertex new_vertex (== bd.vertex_count()). The leaf of attach_to
// becomes a cherry holding attach_to and the new vertex; without attach_to the
// cherry is formed at the leaf of vertex 0.
BranchDecomposition extend_with_pendant(const BranchDecomposition& bd, Vertex new_vertex,
                                        std::optional<Vertex> attach_to);

// Components of a graph with maximum degree at most 2 in discovery order, each
// listed along the path (from its smaller end) or cycle (from its smallest
// vertex towards the smaller neighbour).
std::vector<std::vector<Vertex>> degree2_components(const Graph& g);
// Decomposition of a graph with maximum degree at most 2 of mim-width <= 2.
BranchDecomposition maxdeg2_decomposition(const Graph& g);

// Max over tree edges of sum_{i,j} cutmim(A_e cap V_i, complement cap V_j).
std::size_t partitioned_width_bound(const Graph& g, const BranchDecomposition& bd,
                                    std::span<const VertexSet> parts);
// terms[i][j] for a single cut.
std::vector<std::vector<std::size_t>> partition_terms(const Graph& g, const Cut& c,
                                                      std::span<const Bitset> parts);

std::string decomposition_to_json(const BranchDecomposition& bd);
BranchDecomposition decomposition_from_json(std::string_view text);
std::string decomposition_to_dot(const BranchDecomposition& bd, const Graph* host = nullptr);

}  // namespace widthlab
