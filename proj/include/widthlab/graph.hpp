#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace widthlab {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;
using Bitset = boost::dynamic_bitset<std::uint64_t>;

// Sorted, duplicate-free vertices of some host graph.
using VertexSet = std::vector<Vertex>;

// Simple undirected graph on vertices 0..n-1. Immutable once built; stores an
// adjacency matrix (bit rows) and sorted neighbour lists side by side.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t order);
  // Duplicate edges are merged; self-loops and out-of-range endpoints throw.
  Graph(std::size_t order, std::span<const Edge> edges,
        std::vector<std::string> labels = {});

  std::size_t order() const noexcept { return rows_.size(); }
  std::size_t size() const noexcept { return m_; }

  bool adjacent(Vertex u, Vertex v) const { return rows_[u].test(v); }
  const Bitset& row(Vertex v) const { return rows_[v]; }
  std::span<const Vertex> neighbours(Vertex v) const { return lists_[v]; }
  std::size_t degree(Vertex v) const { return lists_[v].size(); }
  std::size_t max_degree() const;

  // Sorted ascending, each pair (u,v) with u < v.
  std::vector<Edge> edges() const;

  bool has_labels() const noexcept { return !labels_.empty(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::string label(Vertex v) const;

  Bitset empty_set() const { return Bitset(order()); }
  Bitset full_set() const;

  // Structural equality; labels are ignored.
  friend bool operator==(const Graph& a, const Graph& b) { return a.rows_ == b.rows_; }

 private:
  std::vector<Bitset> rows_;
  std::vector<std::vector<Vertex>> lists_;
  std::vector<std::string> labels_;
  std::size_t m_ = 0;
};

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> mapping;  // mapping[i] = host vertex of vertex i
};

// Families: "P" [n], "C" [n>=3], "K" [n], "E" [n] (edgeless), "star" [s],
// "biclique" [s,t], "multipartite" [a1,...,ar], "grid" [rows,cols].
// Paths are numbered left to right, cycles around, grids row-major,
// bicliques and multipartite graphs part by part.
Graph build_named(std::string_view name, std::span<const long long> params);

Graph complement(const Graph& g);
Graph disjoint_union(const Graph& g, const Graph& h);
Graph disjoint_copies(const Graph& g, std::size_t copies);
// Replaces edge uv by the path u, n, n+1, ..., n+k-1, v.
Graph subdivide(const Graph& g, Edge edge, std::size_t k);
// Vertices are taken in ascending order; duplicates are ignored.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> s);
Graph induced_subgraph(const Graph& g, const Bitset& s);
Graph add_edges(const Graph& g, std::span<const Edge> extra);
// Vertex v of g becomes vertex perm[v].
Graph permute(const Graph& g, std::span<const Vertex> perm);

VertexSet to_vertex_set(const Bitset& b);
Bitset to_bitset(std::size_t n, std::span<const Vertex> s);

std::string graph_to_json(const Graph& g);
Graph graph_from_json(std::string_view text);
std::string graph_to_dot(const Graph& g);

}  // namespace widthlab
