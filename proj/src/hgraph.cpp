#include "widthlab/hgraph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "widthlab/errors.hpp"
#include "widthlab/patterns.hpp"

namespace widthlab {

namespace {

bool connected(const Graph& p) {
  std::vector<char> seen(p.order(), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : p.neighbours(v))
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == p.order();
}

// Distinct host edge sets realised by bijections from p onto s.
std::set<std::vector<Edge>> copies_on(const Graph& g, const Graph& p, const VertexSet& s) {
  std::set<std::vector<Edge>> out;
  std::vector<Vertex> perm(s);
  const auto pe = p.edges();
  do {
    std::vector<Edge> used;
    bool ok = true;
    for (auto [a, b] : pe) {
      Vertex u = perm[a], v = perm[b];
      if (!g.adjacent(u, v)) {
        ok = false;
        break;
      }
      used.emplace_back(std::min(u, v), std::max(u, v));
    }
    if (!ok) continue;
    std::sort(used.begin(), used.end());
    out.insert(std::move(used));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

template <class F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  VertexSet s(k);
  std::iota(s.begin(), s.end(), 0);
  while (true) {
    f(s);
    std::size_t i = k;
    while (i > 0 && s[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++s[i - 1];
    for (std::size_t j = i; j < k; ++j) s[j] = s[j - 1] + 1;
  }
}

}  // namespace

HGraphResult build_hgraph(const Graph& g, std::span<const Graph> patterns, std::size_t cap) {
  const std::size_t n = g.order();
  OccurrenceIndex idx;
  idx.patterns.assign(patterns.begin(), patterns.end());
  for (const auto& p : patterns) {
    if (p.order() == 0) throw std::invalid_argument("pattern is the null graph");
    if (!connected(p)) throw std::invalid_argument("pattern is disconnected");
    if (p.order() > cap)
      throw CapExceeded("pattern has " + std::to_string(p.order()) + " vertices, cap is " +
                        std::to_string(cap));
  }
  std::set<std::pair<VertexSet, std::vector<Edge>>> seen;
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    const Graph& p = patterns[i];
    for_each_subset(n, p.order(), [&](const VertexSet& s) {
      for (auto& e : copies_on(g, p, s)) {
        if (!seen.emplace(s, e).second) continue;
        idx.occurrences.push_back({i, s, e});
      }
    });
  }

  const std::size_t m = idx.occurrences.size();
  idx.groups.assign(n, {});
  std::vector<Bitset> closed;  // closed neighbourhood of each occurrence
  std::vector<Bitset> members;
  for (std::size_t h = 0; h < m; ++h) {
    const auto& vs = idx.occurrences[h].vertices;
    idx.anchor.push_back(vs.front());
    idx.groups[vs.front()].push_back(h);
    Bitset b = to_bitset(n, vs), nb = b;
    for (Vertex v : vs) nb |= g.row(v);
    members.push_back(std::move(b));
    closed.push_back(std::move(nb));
  }
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b)
      if (closed[a].intersects(members[b]))
        edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
  return {Graph(m, edges), std::move(idx)};
}

BranchDecomposition transfer_decomposition(const Graph& g, const BranchDecomposition& bd,
                                           const HGraphResult& hg) {
  if (bd.vertex_count() != g.order() || hg.index.groups.size() != g.order())
    throw std::invalid_argument("decomposition, graph and H-graph do not match");
  if (hg.hgraph.order() <= 1)
    throw std::invalid_argument("H-graph has at most one vertex; no decomposition to transfer");
  Tree t = to_tree(bd);
  std::vector<Node> trims;
  for (Vertex v = 0; v < g.order(); ++v) {
    Node leaf = bd.leaf_of(v);
    t.set_vertex(leaf, std::nullopt);
    const auto& f = hg.index.groups[v];
    if (f.empty()) {
      trims.push_back(leaf);
      continue;
    }
    std::vector<Vertex> labels(f.begin(), f.end());
    auto cat = add_caterpillar(t, f.size(), labels);
    Node x = f.size() == 1 ? cat.backbone[0] : t.subdivide(cat.backbone[0], cat.backbone[1]);
    t.add_edge(x, leaf);
    // A single-node decomposition leaves the old node hanging as a leaf.
    if (t.degree(leaf) == 1) trims.push_back(leaf);
  }
  for (Node leaf : trims) t = trim_leaf(std::move(t), leaf);
  return finalize(t);
}

Packing solve_packing(const HGraphResult& hg, std::optional<std::vector<Rational>> weights,
                      const BranchDecomposition* hgraph_bd) {
  const std::size_t m = hg.hgraph.order();
  std::vector<Rational> w = weights ? std::move(*weights) : std::vector<Rational>(m, Rational(1));
  if (w.size() != m) throw std::invalid_argument("missing weight for an occurrence");
  for (const auto& x : w)
    if (x <= 0) throw std::invalid_argument("packing weights must be positive");
  if (m == 0) return {{}, Rational(0)};
  WeightedInstance inst{hg.hgraph, std::move(w)};
  MwisResult r = hgraph_bd ? mwis_mim_dp(inst, *hgraph_bd) : mwis_oracle(inst);
  return {std::vector<std::size_t>(r.set.begin(), r.set.end()), r.weight};
}

Packing solve_packing(const Graph& g, std::span<const Graph> patterns,
                      std::optional<std::vector<Rational>> weights) {
  return solve_packing(build_hgraph(g, patterns), std::move(weights));
}

bool verify_packing(const Graph& g, const HGraphResult& hg, const Packing& p) {
  const auto& occ = hg.index.occurrences;
  Bitset used(g.order()), reach(g.order());
  for (std::size_t id : p.occurrences) {
    if (id >= occ.size()) return false;
    const auto& o = occ[id];
    const Graph& pat = hg.index.patterns.at(o.pattern);
    if (o.vertices.size() != pat.order() || o.edges.size() != pat.size()) return false;
    for (auto [u, v] : o.edges)
      if (!g.adjacent(u, v) || !std::binary_search(o.vertices.begin(), o.vertices.end(), u) ||
          !std::binary_search(o.vertices.begin(), o.vertices.end(), v))
        return false;
    std::vector<Edge> local;
    for (auto [u, v] : o.edges) {
      auto pos = [&](Vertex x) {
        return static_cast<Vertex>(std::lower_bound(o.vertices.begin(), o.vertices.end(), x) -
                                   o.vertices.begin());
      };
      local.emplace_back(pos(u), pos(v));
    }
    if (!contains_induced(Graph(pat.order(), local), pat)) return false;
    Bitset b = to_bitset(g.order(), o.vertices);
    if (b.intersects(reach)) return false;  // shares a vertex or touches an earlier one
    used |= b;
    for (Vertex v : o.vertices) reach |= g.row(v);
    reach |= used;
  }
  return true;
}

}  // namespace widthlab
