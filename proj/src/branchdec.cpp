#include "widthlab/branchdec.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace widthlab {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

void erase_value(std::vector<Node>& v, Node x) { v.erase(std::find(v.begin(), v.end(), x)); }

}  // namespace

Node Tree::add_node() {
  adj_.emplace_back();
  alive_.push_back(1);
  label_.emplace_back();
  return static_cast<Node>(adj_.size() - 1);
}

void Tree::add_edge(Node a, Node b) {
  require(alive(a) && alive(b) && a != b && !has_edge(a, b), "invalid tree edge");
  adj_[a].push_back(b);
  adj_[b].push_back(a);
}

void Tree::remove_edge(Node a, Node b) {
  require(alive(a) && alive(b) && has_edge(a, b), "tree edge absent");
  erase_value(adj_[a], b);
  erase_value(adj_[b], a);
}

void Tree::remove_node(Node v) {
  require(alive(v), "tree node absent");
  for (Node w : adj_[v]) erase_value(adj_[w], v);
  adj_[v].clear();
  alive_[v] = 0;
  label_[v].reset();
}

Node Tree::subdivide(Node a, Node b) {
  remove_edge(a, b);
  Node m = add_node();
  add_edge(a, m);
  add_edge(m, b);
  return m;
}

std::size_t Tree::node_count() const {
  return static_cast<std::size_t>(std::count(alive_.begin(), alive_.end(), 1));
}

bool Tree::has_edge(Node a, Node b) const {
  return std::find(adj_[a].begin(), adj_[a].end(), b) != adj_[a].end();
}

Tree trim_leaf(Tree t, Node v) {
  require(t.alive(v) && t.degree(v) == 1, "trim_leaf needs a leaf");
  std::vector<Node> path{v};
  Node prev = v, cur = t.neighbours(v)[0];
  while (t.degree(cur) == 2) {
    path.push_back(cur);
    Node next = t.neighbours(cur)[0] == prev ? t.neighbours(cur)[1] : t.neighbours(cur)[0];
    prev = cur;
    cur = next;
  }
  require(t.degree(cur) >= 3, "cannot trim: tree is a path");
  for (Node x : path) t.remove_node(x);
  return t;
}

BranchDecomposition::BranchDecomposition(std::size_t node_count, std::vector<TreeEdge> edges,
                                         std::vector<std::pair<Node, Vertex>> leaf_map)
    : adj_(node_count), at_(node_count) {
  require(node_count >= 1, "decomposition needs at least one node");
  for (auto& [a, b] : edges) {
    require(a < node_count && b < node_count && a != b, "tree edge out of range");
    if (a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  require(std::adjacent_find(edges.begin(), edges.end()) == edges.end(), "duplicate tree edge");
  require(edges.size() + 1 == node_count, "tree must have node_count - 1 edges");
  for (auto [a, b] : edges) {
    adj_[a].push_back(b);
    adj_[b].push_back(a);
  }
  std::vector<char> seen(node_count, 0);
  std::vector<Node> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Node v = stack.back();
    stack.pop_back();
    for (Node w : adj_[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  require(reached == node_count, "tree is disconnected");

  leaf_.assign(leaf_map.size(), static_cast<Node>(-1));
  for (auto [node, x] : leaf_map) {
    require(node < node_count, "leaf_map node out of range");
    require(x < leaf_map.size(), "leaf_map vertex out of range");
    require(!at_[node] && leaf_[x] == static_cast<Node>(-1), "leaf_map is not a bijection");
    at_[node] = x;
    leaf_[x] = node;
  }
  for (Node v = 0; v < node_count; ++v) {
    std::size_t d = adj_[v].size();
    require(d <= 3, "tree is not subcubic");
    require((d <= 1) == at_[v].has_value(), "leaves and mapped nodes differ");
    if (d == 2) subdivision_.push_back(v);
  }
  edges_ = std::move(edges);
}

BranchDecomposition finalize(const Tree& t) {
  std::vector<Node> id(t.capacity(), static_cast<Node>(-1));
  Node next = 0;
  for (Node v = 0; v < t.capacity(); ++v)
    if (t.alive(v)) id[v] = next++;
  std::vector<TreeEdge> edges;
  std::vector<std::pair<Node, Vertex>> leaf_map;
  for (Node v = 0; v < t.capacity(); ++v) {
    if (!t.alive(v)) continue;
    for (Node w : t.neighbours(v))
      if (v < w) edges.emplace_back(id[v], id[w]);
    if (auto x = t.vertex(v)) leaf_map.emplace_back(id[v], *x);
  }
  return BranchDecomposition(next, std::move(edges), std::move(leaf_map));
}

Tree to_tree(const BranchDecomposition& bd) {
  Tree t;
  for (std::size_t i = 0; i < bd.node_count(); ++i) t.add_node();
  for (auto [a, b] : bd.edges()) t.add_edge(a, b);
  for (Vertex x = 0; x < bd.vertex_count(); ++x) t.set_vertex(bd.leaf_of(x), x);
  return t;
}

BranchDecomposition relabel(const BranchDecomposition& bd, std::span<const Vertex> map) {
  require(map.size() == bd.vertex_count(), "relabel map size mismatch");
  std::vector<std::pair<Node, Vertex>> leaf_map;
  for (Vertex x = 0; x < bd.vertex_count(); ++x) leaf_map.emplace_back(bd.leaf_of(x), map[x]);
  return BranchDecomposition(bd.node_count(), bd.edges(), std::move(leaf_map));
}

Cut cut_of_edge(const BranchDecomposition& bd, TreeEdge e) {
  auto [a, b] = e;
  require(a < bd.node_count() && b < bd.node_count(), "tree edge out of range");
  const auto& na = bd.neighbours(a);
  require(std::find(na.begin(), na.end(), b) != na.end(), "edge not in tree");
  Cut c{e, Bitset(bd.vertex_count()), Bitset(bd.vertex_count())};
  std::vector<std::pair<Node, Node>> stack{{a, b}};
  while (!stack.empty()) {
    auto [v, from] = stack.back();
    stack.pop_back();
    if (auto x = bd.vertex_at(v)) c.side_a.set(*x);
    for (Node w : bd.neighbours(v))
      if (w != from) stack.emplace_back(w, v);
  }
  c.side_b = ~c.side_a;
  return c;
}

std::vector<Cut> all_cuts(const BranchDecomposition& bd) {
  std::vector<Cut> out;
  out.reserve(bd.edges().size());
  for (auto e : bd.edges()) out.push_back(cut_of_edge(bd, e));
  return out;
}

CaterpillarNodes add_caterpillar(Tree& t, std::size_t length, std::span<const Vertex> labels) {
  require(labels.empty() || labels.size() == length, "caterpillar label count mismatch");
  CaterpillarNodes c;
  for (std::size_t i = 0; i < length; ++i) c.backbone.push_back(t.add_node());
  for (std::size_t i = 0; i < length; ++i) {
    c.leaves.push_back(t.add_node());
    t.add_edge(c.backbone[i], c.leaves[i]);
    if (i > 0) t.add_edge(c.backbone[i - 1], c.backbone[i]);
    if (!labels.empty()) t.set_vertex(c.leaves[i], labels[i]);
  }
  return c;
}

BranchDecomposition caterpillar_decomposition(std::span<const Vertex> order) {
  const std::size_t n = order.size();
  std::vector<char> seen(n, 0);
  for (Vertex x : order) {
    require(x < n && !seen[x], "caterpillar order is not a permutation");
    seen[x] = 1;
  }
  if (n == 1) return BranchDecomposition(1, {}, {{0, order[0]}});
  if (n == 2) return BranchDecomposition(2, {{0, 1}}, {{0, order[0]}, {1, order[1]}});
  Tree t;
  add_caterpillar(t, n, order);
  return finalize(t);
}

BranchDecomposition caterpillar_decomposition(const Graph& g, std::span<const Vertex> order) {
  require(order.size() == g.order(), "caterpillar order does not cover the graph");
  return caterpillar_decomposition(order);
}

BranchDecomposition caterpillar_decomposition(const Graph& g) {
  std::vector<Vertex> order(g.order());
  for (Vertex v = 0; v < g.order(); ++v) order[v] = v;
  return caterpillar_decomposition(order);
}

BranchDecomposition extend_with_pendant(const BranchDecomposition& bd, Vertex new_vertex,
                                        std::optional<Vertex> attach_to) {
  require(new_vertex == bd.vertex_count(), "new vertex must be the next vertex id");
  require(!attach_to || *attach_to < bd.vertex_count(), "attach vertex missing");
  Vertex host = attach_to.value_or(0);
  if (bd.vertex_count() == 1) return BranchDecomposition(2, {{0, 1}}, {{0, host}, {1, new_vertex}});
  Tree t = to_tree(bd);
  Node leaf = bd.leaf_of(host);
  t.set_vertex(leaf, std::nullopt);
  Node keep = t.add_node(), added = t.add_node();
  t.add_edge(leaf, keep);
  t.add_edge(leaf, added);
  t.set_vertex(keep, host);
  t.set_vertex(added, new_vertex);
  return finalize(t);
}

std::vector<std::vector<Vertex>> degree2_components(const Graph& g) {
  require(g.max_degree() <= 2, "graph has a vertex of degree greater than 2");
  std::vector<char> seen(g.order(), 0);
  std::vector<std::vector<Vertex>> comps;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> members{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < members.size(); ++i)
      for (Vertex w : g.neighbours(members[i]))
        if (!seen[w]) {
          seen[w] = 1;
          members.push_back(w);
        }
    // Walk the component: paths from their smaller endpoint, cycles from the
    // smallest vertex towards its smaller neighbour.
    Vertex start = *std::min_element(members.begin(), members.end());
    for (Vertex v : members)
      if (g.degree(v) <= 1 && (g.degree(start) == 2 || v < start)) start = v;
    std::vector<Vertex> walk{start};
    Vertex prev = start;
    Vertex cur = g.degree(start) == 0 ? start : g.neighbours(start)[0];
    while (walk.size() < members.size()) {
      walk.push_back(cur);
      Vertex next = cur;
      for (Vertex w : g.neighbours(cur))
        if (w != prev) next = w;
      prev = cur;
      cur = next;
    }
    comps.push_back(std::move(walk));
  }
  return comps;
}

BranchDecomposition maxdeg2_decomposition(const Graph& g) {
  require(g.order() >= 2, "maxdeg2 decomposition needs at least two vertices");
  auto comps = degree2_components(g);
  Tree t;
  std::vector<Node> attach;
  for (const auto& c : comps) {
    auto cat = add_caterpillar(t, c.size(), c);
    if (c.size() == 1)
      attach.push_back(cat.backbone[0]);
    else
      attach.push_back(t.subdivide(cat.backbone[0], cat.backbone[1]));
  }
  if (comps.size() > 1) {
    auto spine = add_caterpillar(t, comps.size(), {});
    for (std::size_t i = 0; i < comps.size(); ++i) t.add_edge(spine.leaves[i], attach[i]);
  }
  return finalize(t);
}

std::vector<std::vector<std::size_t>> partition_terms(const Graph& g, const Cut& c,
                                                      std::span<const Bitset> parts) {
  std::vector<std::vector<std::size_t>> terms(parts.size(), std::vector<std::size_t>(parts.size()));
  for (std::size_t i = 0; i < parts.size(); ++i) {
    Bitset x = c.side_a & parts[i];
    if (x.none()) continue;
    for (std::size_t j = 0; j < parts.size(); ++j) {
      Bitset y = c.side_b & parts[j];
      if (y.any()) terms[i][j] = cut_value(g, x, y, WidthKind::mim);
    }
  }
  return terms;
}

std::size_t partitioned_width_bound(const Graph& g, const BranchDecomposition& bd,
                                    std::span<const VertexSet> parts) {
  require(bd.vertex_count() == g.order(), "decomposition does not match graph");
  std::vector<Bitset> sets;
  Bitset covered(g.order());
  for (const auto& p : parts) {
    Bitset b = to_bitset(g.order(), p);
    require(!b.intersects(covered), "parts overlap");
    covered |= b;
    sets.push_back(std::move(b));
  }
  require(covered.all(), "parts do not cover the vertex set");
  std::size_t best = 0;
  for (const auto& c : all_cuts(bd)) {
    std::size_t sum = 0;
    for (const auto& row : partition_terms(g, c, sets))
      for (auto v : row) sum += v;
    best = std::max(best, sum);
  }
  return best;
}

std::string decomposition_to_json(const BranchDecomposition& bd) {
  nlohmann::ordered_json j;
  j["nodes"] = bd.node_count();
  auto edges = nlohmann::ordered_json::array();
  for (auto [a, b] : bd.edges()) edges.push_back({a, b});
  j["edges"] = std::move(edges);
  auto leaves = nlohmann::ordered_json::object();
  for (Node v = 0; v < bd.node_count(); ++v)
    if (auto x = bd.vertex_at(v)) leaves[std::to_string(v)] = *x;
  j["leaf_map"] = std::move(leaves);
  j["subdivision_nodes"] = bd.subdivision_nodes();
  return j.dump() + "\n";
}

BranchDecomposition decomposition_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& ex) {
    throw std::invalid_argument(std::string("malformed decomposition file: ") + ex.what());
  }
  require(j.is_object() && j.contains("nodes") && j.contains("edges") && j.contains("leaf_map"),
          "decomposition file needs nodes, edges and leaf_map");
  try {
    std::vector<TreeEdge> edges;
    for (const auto& e : j["edges"]) edges.emplace_back(e.at(0).get<Node>(), e.at(1).get<Node>());
    std::vector<std::pair<Node, Vertex>> leaf_map;
    for (const auto& [key, value] : j["leaf_map"].items())
      leaf_map.emplace_back(static_cast<Node>(std::stoul(key)), value.get<Vertex>());
    BranchDecomposition bd(j["nodes"].get<std::size_t>(), std::move(edges), std::move(leaf_map));
    if (j.contains("subdivision_nodes"))
      require(j["subdivision_nodes"].get<std::vector<Node>>() == bd.subdivision_nodes(),
              "subdivision_nodes must list exactly the internal degree-2 nodes");
    return bd;
  } catch (const nlohmann::json::exception& ex) {
    throw std::invalid_argument(std::string("malformed decomposition file: ") + ex.what());
  } catch (const std::logic_error& ex) {
    if (dynamic_cast<const std::invalid_argument*>(&ex)) throw;
    throw std::invalid_argument(std::string("malformed decomposition file: ") + ex.what());
  }
}

std::string decomposition_to_dot(const BranchDecomposition& bd, const Graph* host) {
  std::ostringstream os;
  os << "graph T {\n";
  for (Node v = 0; v < bd.node_count(); ++v) {
    os << "  " << v;
    if (auto x = bd.vertex_at(v))
      os << " [shape=box,label=\"" << (host ? host->label(*x) : std::to_string(*x)) << "\"]";
    else
      os << " [shape=point]";
    os << ";\n";
  }
  for (auto [a, b] : bd.edges()) os << "  " << a << " -- " << b << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace widthlab
