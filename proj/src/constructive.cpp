#include "widthlab/constructive.hpp"

#include <algorithm>
#include <iterator>
#include <limits>
#include <stdexcept>

#include "widthlab/errors.hpp"
#include "widthlab/patterns.hpp"

namespace widthlab {

namespace {

std::optional<unsigned> ramsey_table(std::size_t r, std::size_t s) {
  if (r > s) std::swap(r, s);
  if (r == 1) return 1;
  if (r == 2) return static_cast<unsigned>(s);
  if (r == 3 && s <= 9) {
    static constexpr unsigned row[] = {6, 9, 14, 18, 23, 28, 36};
    return row[s - 3];
  }
  if (r == 4 && s == 4) return 18;
  if (r == 4 && s == 5) return 25;
  return std::nullopt;
}

BigInt binomial(std::size_t n, std::size_t k) {
  BigInt c = 1;
  for (std::size_t i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

std::size_t clamp_to_size(const BigInt& v) {
  if (v > BigInt(std::numeric_limits<std::size_t>::max() / 4)) return std::numeric_limits<std::size_t>::max() / 4;
  return static_cast<std::size_t>(v);
}

void require_input(const Graph& g, std::size_t t) {
  if (t < 4) throw std::invalid_argument("t must be at least 4");
  if (g.order() == 0) throw std::invalid_argument("graph has no vertices");
}

void require_free(const Graph& g, const std::vector<PatternSpec>& ps) {
  auto verdict = is_free(g, ps);
  if (!verdict.free)
    throw PreconditionFailed("input contains an induced " + to_string(ps[verdict.pattern_index]),
                             verdict.witness);
}

VertexSet merged(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet complement_of(std::size_t n, const VertexSet& s) {
  VertexSet out;
  for (Vertex v = 0; v < n; ++v)
    if (!std::binary_search(s.begin(), s.end(), v)) out.push_back(v);
  return out;
}

// Witness pair of non-adjacent vertices inside s, if any.
std::optional<Edge> non_edge_in(const Graph& g, const VertexSet& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (!g.adjacent(s[i], s[j])) return Edge{s[i], s[j]};
  return std::nullopt;
}

std::size_t neighbours_in(const Graph& g, Vertex v, const VertexSet& s) {
  return static_cast<std::size_t>(
      std::count_if(s.begin(), s.end(), [&](Vertex w) { return g.adjacent(v, w); }));
}

// Copies bd into t; the leaf of local vertex x is labelled host[x].
std::vector<Node> graft(Tree& t, const BranchDecomposition& bd, const VertexSet& host) {
  std::vector<Node> id(bd.node_count());
  for (auto& v : id) v = t.add_node();
  for (auto [a, b] : bd.edges()) t.add_edge(id[a], id[b]);
  for (Vertex x = 0; x < bd.vertex_count(); ++x) t.set_vertex(id[bd.leaf_of(x)], host[x]);
  return id;
}

// Graph on `host` (local ids) keeping only the listed host edges.
Graph local_graph(const VertexSet& host, const std::vector<Edge>& host_edges) {
  std::vector<Edge> e;
  auto local = [&](Vertex v) {
    return static_cast<Vertex>(std::lower_bound(host.begin(), host.end(), v) - host.begin());
  };
  for (auto [u, v] : host_edges) e.emplace_back(local(u), local(v));
  return Graph(host.size(), e);
}

class ClaimChecker {
 public:
  ClaimChecker(const Graph& g, const BranchDecomposition& bd) : g_(g), bd_(bd) {}

  void expect(bool ok, const char* claim, const Cut& c, std::size_t value, std::size_t bound) {
    ++checked;
    if (ok) return;
    throw InvariantViolation(std::string(claim) + " fails at tree edge (" +
                             std::to_string(c.edge.first) + "," + std::to_string(c.edge.second) +
                             "): value " + std::to_string(value) + ", bound " +
                             std::to_string(bound));
  }
  void below(std::size_t value, std::size_t bound, const char* claim, const Cut& c) {
    expect(value < bound, claim, c, value, bound);
  }
  void at_most(std::size_t value, std::size_t bound, const char* claim, const Cut& c) {
    expect(value <= bound, claim, c, value, bound);
  }

  std::size_t cross(const Cut& c, const Bitset& p, const Bitset& q) const {
    Bitset x = c.side_a & p, y = c.side_b & q;
    if (x.none() || y.none()) return 0;
    return cut_value(g_, x, y, WidthKind::mim);
  }

  void certify(CertifiedDecomposition& out) {
    out.evaluated_mimw = evaluate_width(g_, bd_, WidthKind::mim);
    ++checked;
    if (BigInt(*out.evaluated_mimw) >= out.certificate)
      throw InvariantViolation("evaluated mim-width " + std::to_string(*out.evaluated_mimw) +
                               " reaches the certificate " + out.certificate.str());
    out.claims_checked += checked;
  }

  std::size_t checked = 0;

 private:
  const Graph& g_;
  const BranchDecomposition& bd_;
};

bool inside(const std::vector<char>& part, TreeEdge e) { return part[e.first] && part[e.second]; }

std::vector<Bitset> bitsets(std::size_t n, std::initializer_list<const VertexSet*> sets) {
  std::vector<Bitset> out;
  for (const auto* s : sets) out.push_back(to_bitset(n, *s));
  return out;
}

CertifiedDecomposition build_3p1(const Graph& g, std::size_t t, bool check) {
  const std::size_t n = g.order();
  RamseyBound rb = ramsey(3, t);
  BigInt certificate = 5 * rb.value + 8 * t + 46;
  auto part = partition_33(g);
  std::vector<char> in_t1;
  ConstructionCase which = ConstructionCase::complete;

  std::optional<BranchDecomposition> bd;
  if (!part) {
    bd = caterpillar_decomposition(g);
  } else {
    for (const auto* s : {&part->s_a, &part->s_b})
      if (auto ne = non_edge_in(g, *s))
        throw PreconditionFailed("input contains an induced 3P1",
                                 {ne->first, ne->second, s == &part->s_a ? part->v_b : part->v_a});
    bool good = true;
    for (Vertex v : part->s_a) good = good && neighbours_in(g, v, part->s_b) <= 2;
    for (Vertex v : part->s_b) good = good && neighbours_in(g, v, part->s_a) <= 2;
    if (!good) {
      which = ConstructionCase::bad;
      bd = caterpillar_decomposition(g);
    } else {
      which = ConstructionCase::good;
      Tree tree;
      VertexSet h = merged(part->s_a, part->s_b);
      std::optional<Node> x;
      if (h.size() >= 2) {
        std::vector<Edge> cross;
        for (Vertex u : part->s_a)
          for (Vertex v : part->s_b)
            if (g.adjacent(u, v)) cross.emplace_back(std::min(u, v), std::max(u, v));
        auto bd1 = maxdeg2_decomposition(local_graph(h, cross));
        auto id = graft(tree, bd1, h);
        Node u = id[bd1.leaf_of(0)];
        x = tree.subdivide(u, tree.neighbours(u)[0]);
      } else if (h.size() == 1) {
        x = tree.add_node();
        tree.set_vertex(*x, h[0]);
      }
      in_t1.assign(tree.capacity(), 1);
      VertexSet rest = complement_of(n, h);
      if (rest.size() < 2) throw InvariantViolation("remainder caterpillar has fewer than 2 leaves");
      auto cat = add_caterpillar(tree, rest.size(), rest);
      Node y = tree.subdivide(cat.backbone[0], cat.backbone[1]);
      if (x) tree.add_edge(*x, y);
      in_t1.resize(tree.capacity(), 0);
      bd = finalize(tree);
    }
  }

  CertifiedDecomposition out{*bd, which, "5R(3,t)+8t+46", rb, certificate, std::nullopt, 0};
  if (!check) return out;

  ClaimChecker ck(g, out.bd);
  if (part) {
    const std::size_t r6 = clamp_to_size(rb.value) + 6;
    auto parts = bitsets(n, {&part->s_a, &part->s_b, &part->s_ab, &part->s_z});
    enum { A, B, AB, Z };
    for (const auto& c : all_cuts(out.bd)) {
      auto terms = partition_terms(g, c, parts);
      ck.at_most(terms[A][A], 1, "clique class", c);
      ck.at_most(terms[B][B], 1, "clique class", c);
      for (auto [i, j] : {std::pair{A, AB}, {B, AB}, {AB, A}, {AB, B}, {AB, AB}})
        ck.below(terms[i][j], r6, "classes with a common neighbour", c);
      for (int i = A; i <= Z; ++i) {
        ck.at_most(terms[Z][i], 2, "pair class", c);
        ck.at_most(terms[i][Z], 2, "pair class", c);
      }
      for (auto [i, j] : {std::pair{A, B}, {B, A}}) {
        if (which == ConstructionCase::bad)
          ck.below(terms[i][j], 4 * t, "bad-case cross term", c);
        else if (inside(in_t1, c.edge))
          ck.at_most(terms[i][j], 2, "cross term inside the degree-2 part", c);
        else
          ck.at_most(terms[i][j], 0, "cross term outside the degree-2 part", c);
      }
      std::size_t sum = 0;
      for (const auto& row : terms)
        for (auto v : row) sum += v;
      ck.expect(BigInt(sum) < certificate, "partitioned sum", c, sum, clamp_to_size(certificate));
    }
  }
  ck.certify(out);
  return out;
}

CertifiedDecomposition build_4p1(const Graph& g, std::size_t t, bool check) {
  const std::size_t n = g.order();
  RamseyBound rb = ramsey(4, t);
  BigInt certificate = 43 * rb.value + 24 * t + 214;
  const char* formula = "43R(4,t)+24t+214";
  auto part = partition_42(g);
  if (!part) {
    // No independent triple: g is (3P1, co(K_{3,t}+P1))-free, since
    // co(K_{2,t}+P1) is an induced subgraph of co(K_{3,t}+P1).
    auto inner = build_3p1(g, t, check);
    inner.construction = ConstructionCase::delegated;
    inner.formula = formula;
    inner.ramsey = rb;
    inner.certificate = certificate;
    if (inner.evaluated_mimw && BigInt(*inner.evaluated_mimw) >= certificate)
      throw InvariantViolation("delegated decomposition reaches the certificate");
    return inner;
  }
  const auto& s = part->s;
  for (int x = 0; x < 3; ++x)
    if (auto ne = non_edge_in(g, s[1 << x]))
      throw PreconditionFailed("input contains an induced 4P1",
                               {ne->first, ne->second, part->v[(x + 1) % 3], part->v[(x + 2) % 3]});

  const std::size_t threshold = 3 * t;
  bool ac[3][3] = {};
  for (int p = 0; p < 3; ++p)
    for (int q = 0; q < 3; ++q)
      if (p != q) ac[p][q] = almost_complete(g, s[1 << p], s[1 << q], threshold);

  VertexSet h1 = merged(merged(s[1], s[2]), s[4]);
  std::vector<Edge> e1;
  for (int p = 0; p < 3; ++p)
    for (int q = p + 1; q < 3; ++q) {
      if (ac[p][q] || ac[q][p]) continue;
      for (Vertex u : s[1 << p])
        for (Vertex v : s[1 << q])
          if (g.adjacent(u, v)) e1.emplace_back(std::min(u, v), std::max(u, v));
    }
  Graph g1 = local_graph(h1, e1);
  if (g1.max_degree() > 2) throw InvariantViolation("G1 has a vertex of degree greater than 2");

  // Pendants in class order; each good vertex has at most one neighbour in
  // the singleton class it avoids.
  VertexSet pendants;
  std::vector<std::optional<Vertex>> attach;
  for (int x = 0; x < 3; ++x) {
    const auto& sx = s[1 << x];
    for (Vertex v : s[7 ^ (1 << x)]) {
      std::optional<Vertex> nb;
      std::size_t count = 0;
      for (Vertex u : sx)
        if (g.adjacent(u, v)) {
          nb = u;
          ++count;
        }
      if (count >= 2) {
        part->star[x].push_back(v);
        continue;
      }
      pendants.push_back(v);
      attach.push_back(nb);
    }
  }
  VertexSet h2 = h1;  // local order: G1 vertices, then pendants
  h2.insert(h2.end(), pendants.begin(), pendants.end());

  Tree tree;
  std::optional<Node> r;
  if (h2.size() == 1) {
    r = tree.add_node();
    tree.set_vertex(*r, h2[0]);
  } else if (h2.size() >= 2) {
    auto local = [&](Vertex v) {
      return static_cast<Vertex>(std::lower_bound(h1.begin(), h1.end(), v) - h1.begin());
    };
    std::optional<BranchDecomposition> bd2;
    if (h1.size() >= 2) {
      bd2 = maxdeg2_decomposition(g1);
      for (std::size_t i = 0; i < pendants.size(); ++i) {
        std::optional<Vertex> a;
        if (attach[i]) a = local(*attach[i]);
        bd2 = extend_with_pendant(*bd2, static_cast<Vertex>(h1.size() + i), a);
      }
    } else {
      bd2 = caterpillar_decomposition(Graph(h2.size()));
    }
    auto id = graft(tree, *bd2, h2);
    TreeEdge e = bd2->edges().front();
    r = tree.subdivide(id[e.first], id[e.second]);
  }
  std::vector<char> in_t2(tree.capacity(), 1);
  VertexSet sorted_h2 = h2;
  std::sort(sorted_h2.begin(), sorted_h2.end());
  VertexSet rest = complement_of(n, sorted_h2);
  if (rest.size() < 3) throw InvariantViolation("remainder caterpillar has fewer than 3 leaves");
  auto cat = add_caterpillar(tree, rest.size(), rest);
  Node sn = tree.subdivide(cat.backbone[0], cat.backbone[1]);
  if (r) tree.add_edge(*r, sn);
  in_t2.resize(tree.capacity(), 0);

  CertifiedDecomposition out{finalize(tree), ConstructionCase::general, formula, rb, certificate,
                             std::nullopt, 0};
  if (!check) return out;

  ClaimChecker ck(g, out.bd);
  const std::size_t rv = clamp_to_size(rb.value);
  std::vector<Bitset> parts;
  for (int m = 1; m < 8; ++m) parts.push_back(to_bitset(n, s[m]));
  parts.push_back(to_bitset(n, part->s_z));
  const int z = 7;
  std::array<Bitset, 3> star, good;
  for (int x = 0; x < 3; ++x) {
    star[x] = to_bitset(n, part->star[x]);
    good[x] = parts[(7 ^ (1 << x)) - 1] - star[x];
  }
  for (const auto& c : all_cuts(out.bd)) {
    auto terms = partition_terms(g, c, parts);
    for (int i = 0; i < 8; ++i) {
      ck.at_most(terms[z][i], 3, "triple class", c);
      ck.at_most(terms[i][z], 3, "triple class", c);
    }
    for (int a = 1; a < 8; ++a)
      for (int b = 1; b < 8; ++b)
        if (a & b) ck.below(terms[a - 1][b - 1], rv + 4, "classes with a common neighbour", c);
    for (int p = 0; p < 3; ++p)
      for (int q = 0; q < 3; ++q) {
        if (p == q) continue;
        std::size_t v = terms[(1 << p) - 1][(1 << q) - 1];
        if (ac[p][q] || ac[q][p])
          ck.below(v, threshold + 1, "almost-complete classes", c);
        else if (inside(in_t2, c.edge))
          ck.at_most(v, 2, "singleton cross term inside G2", c);
        else
          ck.at_most(v, 0, "singleton cross term outside G2", c);
      }
    for (int x = 0; x < 3; ++x) {
      const Bitset& sx = parts[(1 << x) - 1];
      const int y = (7 ^ (1 << x)) - 1;
      for (auto [value, bound] : {std::pair{ck.cross(c, sx, star[x]), rv + t + 1},
                                  {ck.cross(c, star[x], sx), rv + t + 1}})
        ck.below(value, bound, "bad pair-class vertices", c);
      for (std::size_t v : {ck.cross(c, sx, good[x]), ck.cross(c, good[x], sx)}) {
        if (inside(in_t2, c.edge))
          ck.at_most(v, 2, "good pair-class vertices inside G2", c);
        else
          ck.at_most(v, 0, "good pair-class vertices outside G2", c);
      }
      ck.at_most(terms[(1 << x) - 1][y], rv + t + 3, "singleton against pair class", c);
      ck.at_most(terms[y][(1 << x) - 1], rv + t + 3, "singleton against pair class", c);
    }
    std::size_t sum = 0;
    for (const auto& row : terms)
      for (auto v : row) sum += v;
    ck.expect(BigInt(sum) < certificate, "partitioned sum", c, sum, clamp_to_size(certificate));
  }
  ck.certify(out);
  return out;
}

}  // namespace

RamseyBound ramsey(std::size_t r, std::size_t s) {
  if (r < 1 || s < 1) throw std::invalid_argument("Ramsey arguments must be positive");
  if (auto v = ramsey_table(r, s)) return {r, s, BigInt(*v), RamseyProvenance::exact_table};
  return {r, s, binomial(r + s - 2, r - 1), RamseyProvenance::binomial_upper};
}

std::string to_string(RamseyProvenance p) {
  return p == RamseyProvenance::exact_table ? "exact-table" : "binomial-upper";
}

std::string to_string(ConstructionCase c) {
  switch (c) {
    case ConstructionCase::complete: return "complete";
    case ConstructionCase::good: return "good";
    case ConstructionCase::bad: return "bad";
    case ConstructionCase::delegated: return "delegated";
    case ConstructionCase::general: return "general";
  }
  return "general";
}

bool almost_complete(const Graph& g, std::span<const Vertex> a, std::span<const Vertex> b,
                     std::size_t threshold) {
  Bitset bs = to_bitset(g.order(), b);
  std::size_t far = 0;
  for (Vertex x : a) {
    if (bs.test(x)) throw std::invalid_argument("almost_complete needs disjoint sets");
    std::size_t missing = b.size() - (g.row(x) & bs).count();
    if (missing >= threshold) ++far;
  }
  return far <= 2;
}

std::optional<Partition33> partition_33(const Graph& g) {
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (g.adjacent(u, v)) continue;
      Partition33 p{u, v, {}, {}, {}, {u, v}};
      for (Vertex w = 0; w < g.order(); ++w) {
        if (w == u || w == v) continue;
        bool a = g.adjacent(w, u), b = g.adjacent(w, v);
        if (a && b)
          p.s_ab.push_back(w);
        else if (a)
          p.s_a.push_back(w);
        else if (b)
          p.s_b.push_back(w);
        else
          throw PreconditionFailed("input contains an induced 3P1", {u, v, w});
      }
      return p;
    }
  return std::nullopt;
}

std::optional<Partition42> partition_42(const Graph& g) {
  const std::size_t n = g.order();
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) {
      if (g.adjacent(a, b)) continue;
      for (Vertex c = b + 1; c < n; ++c) {
        if (g.adjacent(a, c) || g.adjacent(b, c)) continue;
        Partition42 p;
        p.v = {a, b, c};
        p.s_z = {a, b, c};
        for (Vertex w = 0; w < n; ++w) {
          if (w == a || w == b || w == c) continue;
          unsigned mask = (g.adjacent(w, a) ? 1u : 0u) | (g.adjacent(w, b) ? 2u : 0u) |
                          (g.adjacent(w, c) ? 4u : 0u);
          if (mask == 0) throw PreconditionFailed("input contains an induced 4P1", {a, b, c, w});
          p.s[mask].push_back(w);
        }
        return p;
      }
    }
  return std::nullopt;
}

CertifiedDecomposition decompose_3p1(const Graph& g, std::size_t t, ConstructOptions opt) {
  require_input(g, t);
  if (opt.verify_freeness)
    require_free(g, {PatternSpec{pattern::Edgeless{3}},
                     PatternSpec{pattern::CoBicliquePlusUniversal{3, t}}});
  return build_3p1(g, t, opt.check_claims);
}

CertifiedDecomposition decompose_4p1(const Graph& g, std::size_t t, ConstructOptions opt) {
  require_input(g, t);
  if (opt.verify_freeness)
    require_free(g, {PatternSpec{pattern::Edgeless{4}},
                     PatternSpec{pattern::CoBicliquePlusUniversal{2, t}}});
  return build_4p1(g, t, opt.check_claims);
}

}  // namespace widthlab
