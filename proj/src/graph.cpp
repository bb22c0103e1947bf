#include "widthlab/graph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace widthlab {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

Graph::Graph(std::size_t order) : rows_(order, Bitset(order)), lists_(order) {}

Graph::Graph(std::size_t order, std::span<const Edge> edges, std::vector<std::string> labels)
    : Graph(order) {
  require(labels.empty() || labels.size() == order, "label count does not match vertex count");
  labels_ = std::move(labels);
  for (auto [u, v] : edges) {
    require(u < order && v < order, "edge endpoint out of range");
    require(u != v, "self-loop");
    rows_[u].set(v);
    rows_[v].set(u);
  }
  for (Vertex v = 0; v < order; ++v) {
    auto& list = lists_[v];
    list.reserve(rows_[v].count());
    for (auto w = rows_[v].find_first(); w != Bitset::npos; w = rows_[v].find_next(w))
      list.push_back(static_cast<Vertex>(w));
    m_ += list.size();
  }
  m_ /= 2;
}

std::size_t Graph::max_degree() const {
  std::size_t d = 0;
  for (const auto& l : lists_) d = std::max(d, l.size());
  return d;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v : lists_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::string Graph::label(Vertex v) const {
  return labels_.empty() ? std::to_string(v) : labels_[v];
}

Bitset Graph::full_set() const {
  Bitset b(order());
  b.set();
  return b;
}

Graph build_named(std::string_view name, std::span<const long long> params) {
  auto arity = [&](std::size_t k) {
    require(params.size() == k, "wrong number of parameters for family " + std::string(name));
  };
  auto at_least = [&](long long v, long long lo) {
    require(v >= lo, "parameter out of range for family " + std::string(name));
    return static_cast<std::size_t>(v);
  };
  std::vector<Edge> e;
  if (name == "P") {
    arity(1);
    std::size_t n = at_least(params[0], 1);
    for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, e);
  }
  if (name == "C") {
    arity(1);
    std::size_t n = at_least(params[0], 3);
    for (Vertex i = 0; i < n; ++i) e.emplace_back(i, static_cast<Vertex>((i + 1) % n));
    return Graph(n, e);
  }
  if (name == "K") {
    arity(1);
    std::size_t n = at_least(params[0], 1);
    for (Vertex i = 0; i < n; ++i)
      for (Vertex j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph(n, e);
  }
  if (name == "E") {
    arity(1);
    return Graph(at_least(params[0], 1));
  }
  if (name == "star") {
    arity(1);
    std::size_t s = at_least(params[0], 1);
    for (Vertex i = 1; i <= s; ++i) e.emplace_back(0, i);
    return Graph(s + 1, e);
  }
  if (name == "biclique" || name == "multipartite") {
    if (name == "biclique") arity(2);
    require(!params.empty(), "multipartite needs at least one part");
    std::vector<std::size_t> start;
    std::size_t n = 0;
    for (auto p : params) {
      start.push_back(n);
      n += at_least(p, 1);
    }
    for (std::size_t a = 0; a < params.size(); ++a)
      for (std::size_t b = a + 1; b < params.size(); ++b)
        for (std::size_t i = 0; i < static_cast<std::size_t>(params[a]); ++i)
          for (std::size_t j = 0; j < static_cast<std::size_t>(params[b]); ++j)
            e.emplace_back(static_cast<Vertex>(start[a] + i), static_cast<Vertex>(start[b] + j));
    return Graph(n, e);
  }
  if (name == "grid") {
    arity(2);
    std::size_t rows = at_least(params[0], 1), cols = at_least(params[1], 1);
    auto id = [cols](std::size_t r, std::size_t c) { return static_cast<Vertex>(r * cols + c); };
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) {
        if (c + 1 < cols) e.emplace_back(id(r, c), id(r, c + 1));
        if (r + 1 < rows) e.emplace_back(id(r, c), id(r + 1, c));
      }
    return Graph(rows * cols, e);
  }
  throw std::invalid_argument("unknown graph family: " + std::string(name));
}

Graph complement(const Graph& g) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) e.emplace_back(u, v);
  return Graph(g.order(), e, g.labels());
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  auto e = g.edges();
  auto shift = static_cast<Vertex>(g.order());
  for (auto [u, v] : h.edges()) e.emplace_back(u + shift, v + shift);
  std::vector<std::string> labels;
  if (g.has_labels() || h.has_labels()) {
    for (Vertex v = 0; v < g.order(); ++v) labels.push_back(g.label(v));
    for (Vertex v = 0; v < h.order(); ++v) labels.push_back(h.label(v));
  }
  return Graph(g.order() + h.order(), e, std::move(labels));
}

Graph disjoint_copies(const Graph& g, std::size_t copies) {
  Graph out;
  for (std::size_t i = 0; i < copies; ++i) out = disjoint_union(out, g);
  return out;
}

Graph subdivide(const Graph& g, Edge edge, std::size_t k) {
  auto [u, v] = edge;
  require(u < g.order() && v < g.order() && g.adjacent(u, v), "edge to subdivide is absent");
  require(k >= 1, "subdivision count must be positive");
  std::vector<Edge> e;
  for (auto f : g.edges())
    if (!(f == Edge{std::min(u, v), std::max(u, v)})) e.push_back(f);
  auto n = static_cast<Vertex>(g.order());
  Vertex prev = u;
  for (Vertex i = 0; i < k; ++i) {
    e.emplace_back(prev, n + i);
    prev = n + i;
  }
  e.emplace_back(prev, v);
  std::vector<std::string> labels;
  if (g.has_labels()) {
    labels = g.labels();
    for (std::size_t i = 0; i < k; ++i) labels.push_back(std::to_string(n + i));
  }
  return Graph(g.order() + k, e, std::move(labels));
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> s) {
  std::vector<Vertex> keep(s.begin(), s.end());
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  require(keep.empty() || keep.back() < g.order(), "vertex out of range");
  std::vector<Vertex> pos(g.order(), static_cast<Vertex>(-1));
  for (Vertex i = 0; i < keep.size(); ++i) pos[keep[i]] = i;
  std::vector<Edge> e;
  for (Vertex i = 0; i < keep.size(); ++i)
    for (Vertex w : g.neighbours(keep[i]))
      if (pos[w] != static_cast<Vertex>(-1) && i < pos[w]) e.emplace_back(i, pos[w]);
  std::vector<std::string> labels;
  if (g.has_labels())
    for (Vertex v : keep) labels.push_back(g.label(v));
  return {Graph(keep.size(), e, std::move(labels)), std::move(keep)};
}

Graph induced_subgraph(const Graph& g, const Bitset& s) {
  auto vs = to_vertex_set(s);
  return induced_subgraph(g, vs).graph;
}

Graph add_edges(const Graph& g, std::span<const Edge> extra) {
  auto e = g.edges();
  e.insert(e.end(), extra.begin(), extra.end());
  return Graph(g.order(), e, g.labels());
}

Graph permute(const Graph& g, std::span<const Vertex> perm) {
  require(perm.size() == g.order(), "permutation size mismatch");
  std::vector<Edge> e;
  for (auto [u, v] : g.edges()) e.emplace_back(perm[u], perm[v]);
  std::vector<std::string> labels;
  if (g.has_labels()) {
    labels.resize(g.order());
    for (Vertex v = 0; v < g.order(); ++v) labels[perm[v]] = g.label(v);
  }
  return Graph(g.order(), e, std::move(labels));
}

VertexSet to_vertex_set(const Bitset& b) {
  VertexSet out;
  out.reserve(b.count());
  for (auto v = b.find_first(); v != Bitset::npos; v = b.find_next(v))
    out.push_back(static_cast<Vertex>(v));
  return out;
}

Bitset to_bitset(std::size_t n, std::span<const Vertex> s) {
  Bitset b(n);
  for (Vertex v : s) {
    require(v < n, "vertex out of range");
    b.set(v);
  }
  return b;
}

std::string graph_to_json(const Graph& g) {
  nlohmann::ordered_json j;
  j["n"] = g.order();
  auto edges = nlohmann::ordered_json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  if (g.has_labels()) j["labels"] = g.labels();
  return j.dump() + "\n";
}

Graph graph_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& ex) {
    throw std::invalid_argument(std::string("malformed graph file: ") + ex.what());
  }
  require(j.is_object() && j.contains("n") && j.contains("edges"),
          "graph file needs fields n and edges");
  require(j["n"].is_number_unsigned(), "graph field n must be a non-negative integer");
  std::vector<Edge> edges;
  for (const auto& e : j["edges"]) {
    require(e.is_array() && e.size() == 2 && e[0].is_number_unsigned() &&
                e[1].is_number_unsigned(),
            "each edge must be a pair of vertex ids");
    edges.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j["labels"].get<std::vector<std::string>>();
  return Graph(j["n"].get<std::size_t>(), edges, std::move(labels));
}

std::string graph_to_dot(const Graph& g) {
  std::ostringstream os;
  os << "graph G {\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    os << "  " << v;
    if (g.has_labels()) os << " [label=\"" << g.label(v) << "\"]";
    os << ";\n";
  }
  for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace widthlab
