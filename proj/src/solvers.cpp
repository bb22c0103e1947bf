#include "widthlab/solvers.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>

namespace widthlab {

using boost::multiprecision::cpp_int;

namespace {

// Scales rational weights to integers with a common denominator.
struct Scaled {
  std::vector<cpp_int> weights;
  cpp_int denominator;
};

Scaled scale(const std::vector<Rational>& w) {
  cpp_int l = 1;
  for (const auto& x : w) {
    if (x < 0) throw std::invalid_argument("weights must be non-negative");
    l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(x));
  }
  Scaled s{{}, l};
  for (const auto& x : w)
    s.weights.push_back(boost::multiprecision::numerator(x) * (l / boost::multiprecision::denominator(x)));
  return s;
}

bool fits_int64(const Scaled& s) {
  cpp_int total = 0;
  for (const auto& x : s.weights) total += x;
  return total <= cpp_int(std::numeric_limits<std::int64_t>::max() / 2);
}

template <class W>
std::vector<W> convert(const Scaled& s) {
  std::vector<W> out;
  for (const auto& x : s.weights) out.push_back(static_cast<W>(x));
  return out;
}

Rational unscale(const cpp_int& v, const Scaled& s) { return Rational(v, s.denominator); }

void check_instance(const WeightedInstance& inst) {
  if (inst.weights.size() != inst.graph.order())
    throw std::invalid_argument("one weight per vertex required");
}

template <class W>
class MwisSearch {
 public:
  MwisSearch(const Graph& g, std::vector<W> w) : g_(g), w_(std::move(w)), best_set_(g.order()) {}

  Bitset run() {
    Bitset cur(g_.order());
    rec(g_.full_set(), cur, W(0));
    return best_set_;
  }

 private:
  // Greedy partition of p into cliques, heaviest vertices first; the sum of
  // the heaviest weight per clique bounds any independent subset of p.
  W clique_cover_bound(const Bitset& p) const {
    std::vector<Vertex> order = to_vertex_set(p);
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return w_[a] > w_[b]; });
    std::vector<Bitset> cliques;
    W bound = 0;
    for (Vertex v : order) {
      bool placed = false;
      for (auto& c : cliques) {
        if (c.is_subset_of(g_.row(v))) {
          c.set(v);
          placed = true;
          break;
        }
      }
      if (!placed) {
        cliques.emplace_back(g_.order());
        cliques.back().set(v);
        bound += w_[v];
      }
    }
    return bound;
  }

  void rec(Bitset p, Bitset& cur, W value) {
    // Vertices with no live neighbour are always taken.
    std::vector<Vertex> forced;
    for (auto v = p.find_first(); v != Bitset::npos; v = p.find_next(v))
      if (!g_.row(static_cast<Vertex>(v)).intersects(p)) forced.push_back(static_cast<Vertex>(v));
    for (Vertex v : forced) {
      p.reset(v);
      cur.set(v);
      value += w_[v];
    }
    if (p.none()) {
      if (!found_ || value > best_) {
        best_ = value;
        best_set_ = cur;
        found_ = true;
      }
    } else if (!found_ || value + clique_cover_bound(p) > best_) {
      Vertex pick = 0;
      std::size_t deg = 0;
      for (auto v = p.find_first(); v != Bitset::npos; v = p.find_next(v)) {
        std::size_t d = (g_.row(static_cast<Vertex>(v)) & p).count();
        if (d > deg) {
          deg = d;
          pick = static_cast<Vertex>(v);
        }
      }
      Bitset with = p;
      with.reset(pick);
      with -= g_.row(pick);
      cur.set(pick);
      rec(std::move(with), cur, value + w_[pick]);
      cur.reset(pick);
      p.reset(pick);
      rec(std::move(p), cur, value);
    }
    for (Vertex v : forced) cur.reset(v);
  }

  const Graph& g_;
  std::vector<W> w_;
  W best_ = 0;
  bool found_ = false;
  Bitset best_set_;
};

template <class W>
class MimDp {
 public:
  MimDp(const Graph& g, std::vector<W> w, const BranchDecomposition& bd)
      : g_(g), w_(std::move(w)), bd_(bd), n_(g.order()) {}

  Bitset run(DpStats* stats) {
    if (bd_.node_count() == 1) {
      Bitset s(n_);
      if (n_ == 1 && w_[0] > 0) s.set(0);
      return s;
    }
    auto [a, b] = bd_.edges().front();
    stats_ = stats;
    if (stats_) stats_->classes_per_node.assign(bd_.node_count(), 0);
    Table ta = solve(a, b), tb = solve(b, a);
    // Root: the two sides cover V, nothing lies outside.
    W best = 0;
    Bitset best_set(n_);
    bool found = false;
    for (const auto& [ka, row_a] : ta.rows)
      for (const auto& [kb, row_b] : tb.rows) {
        const auto* ea = ta.lookup(ka, kb & ta.inside);
        const auto* eb = tb.lookup(kb, ka & tb.inside);
        if (!ea || !eb) continue;
        W v = ea->value + eb->value;
        if (!found || v > best) {
          best = v;
          best_set = ea->set | eb->set;
          found = true;
        }
      }
    return best_set;
  }

 private:
  struct Entry {
    W value;
    Bitset set;
  };
  struct Table {
    Bitset inside;                  // A_x
    std::vector<Bitset> keys_b;     // admissible constraints from outside
    std::map<Bitset, std::size_t> index_b;
    std::map<Bitset, std::vector<std::optional<Entry>>> rows;  // by N(S) outside

    const Entry* lookup(const Bitset& ka, const Bitset& kb) const {
      auto r = rows.find(ka);
      auto c = index_b.find(kb);
      if (r == rows.end() || c == index_b.end()) return nullptr;
      const auto& e = r->second[c->second];
      return e ? &*e : nullptr;
    }
  };

  // All unions of N(u) cap inside over u outside.
  void close_keys(Table& t) const {
    std::vector<Bitset> gens;
    Bitset outside = ~t.inside;
    for (auto u = outside.find_first(); u != Bitset::npos; u = outside.find_next(u)) {
      Bitset gen = g_.row(static_cast<Vertex>(u)) & t.inside;
      if (gen.any()) gens.push_back(std::move(gen));
    }
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    t.keys_b.assign(1, Bitset(n_));
    t.index_b.clear();
    t.index_b.emplace(t.keys_b[0], 0);
    for (const auto& gen : gens) {
      std::size_t count = t.keys_b.size();
      for (std::size_t i = 0; i < count; ++i) {
        Bitset u = t.keys_b[i] | gen;
        if (t.index_b.emplace(u, t.keys_b.size()).second) t.keys_b.push_back(std::move(u));
      }
    }
  }

  void offer(Table& t, const Bitset& ka, std::size_t kb, W value, const Bitset& set) const {
    auto& row = t.rows[ka];
    if (row.empty()) row.resize(t.keys_b.size());
    auto& e = row[kb];
    if (!e || value > e->value) e = Entry{value, set};
  }

  // Table for the subtree hanging from `node` when entered from `parent`.
  Table solve(Node node, Node parent) {
    std::vector<Node> children;
    for (Node c : bd_.neighbours(node))
      if (c != parent) children.push_back(c);
    if (children.size() == 1) {
      Table t = solve(children[0], node);
      record(node, t);
      return t;
    }
    Table t;
    if (children.empty()) {
      Vertex v = *bd_.vertex_at(node);
      t.inside = Bitset(n_);
      t.inside.set(v);
      close_keys(t);
      Bitset none(n_), self(n_);
      self.set(v);
      for (std::size_t i = 0; i < t.keys_b.size(); ++i) {
        offer(t, none, i, W(0), none);
        if (!t.keys_b[i].test(v)) offer(t, g_.row(v), i, w_[v], self);
      }
      record(node, t);
      return t;
    }
    Table ty = solve(children[0], node), tz = solve(children[1], node);
    t.inside = ty.inside | tz.inside;
    close_keys(t);
    Bitset outside = ~t.inside;
    for (const auto& [ky, row_y] : ty.rows)
      for (const auto& [kz, row_z] : tz.rows) {
        Bitset ka = (ky | kz) & outside;
        for (std::size_t i = 0; i < t.keys_b.size(); ++i) {
          const Bitset& kb = t.keys_b[i];
          const auto* ey = ty.lookup(ky, (kz | kb) & ty.inside);
          if (!ey) continue;
          const auto* ez = tz.lookup(kz, (ky | kb) & tz.inside);
          if (!ez) continue;
          offer(t, ka, i, ey->value + ez->value, ey->set | ez->set);
        }
      }
    record(node, t);
    return t;
  }

  void record(Node node, const Table& t) {
    if (!stats_) return;
    std::size_t c = std::max(t.rows.size(), t.keys_b.size());
    stats_->classes_per_node[node] = c;
    stats_->max_classes = std::max(stats_->max_classes, c);
  }

  const Graph& g_;
  std::vector<W> w_;
  const BranchDecomposition& bd_;
  std::size_t n_;
  DpStats* stats_ = nullptr;
};

Rational weight_of(const WeightedInstance& inst, const VertexSet& s) {
  Rational total = 0;
  for (Vertex v : s) total += inst.weights[v];
  return total;
}

}  // namespace

WeightedInstance unit_weights(const Graph& g) {
  return {g, std::vector<Rational>(g.order(), Rational(1))};
}

bool is_independent(const Graph& g, std::span<const Vertex> s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (s[i] == s[j] || g.adjacent(s[i], s[j])) return false;
  return true;
}

MwisResult mwis_oracle(const WeightedInstance& inst) {
  check_instance(inst);
  auto scaled = scale(inst.weights);
  Bitset set = fits_int64(scaled)
                   ? MwisSearch<std::int64_t>(inst.graph, convert<std::int64_t>(scaled)).run()
                   : MwisSearch<cpp_int>(inst.graph, scaled.weights).run();
  auto vs = to_vertex_set(set);
  return {vs, weight_of(inst, vs)};
}

MwisResult mwis_mim_dp(const WeightedInstance& inst, const BranchDecomposition& bd, DpStats* stats) {
  check_instance(inst);
  if (bd.vertex_count() != inst.graph.order())
    throw std::invalid_argument("decomposition does not match graph");
  auto scaled = scale(inst.weights);
  Bitset set = fits_int64(scaled)
                   ? MimDp<std::int64_t>(inst.graph, convert<std::int64_t>(scaled), bd).run(stats)
                   : MimDp<cpp_int>(inst.graph, scaled.weights, bd).run(stats);
  auto vs = to_vertex_set(set);
  return {vs, weight_of(inst, vs)};
}

void validate(const Graph& g, const ListAssignment& l) {
  if (l.lists.size() != g.order()) throw std::invalid_argument("one list per vertex required");
  if (l.k == 0 || l.k > 64) throw std::invalid_argument("colour budget must be in 1..64");
  for (const auto& list : l.lists)
    for (int c : list)
      if (c < 1 || static_cast<std::size_t>(c) > l.k)
        throw std::invalid_argument("list colour out of range 1..k");
}

std::optional<std::vector<int>> list_colouring_oracle(const Graph& g, const ListAssignment& l) {
  validate(g, l);
  const std::size_t n = g.order();
  std::vector<std::uint64_t> domain(n, 0);
  for (Vertex v = 0; v < n; ++v)
    for (int c : l.lists[v]) domain[v] |= std::uint64_t{1} << (c - 1);
  std::vector<int> colour(n, 0);

  auto rec = [&](auto&& self, std::size_t coloured) -> bool {
    if (coloured == n) return true;
    Vertex pick = 0;
    int fewest = 65;
    for (Vertex v = 0; v < n; ++v)
      if (!colour[v] && __builtin_popcountll(domain[v]) < fewest) {
        fewest = __builtin_popcountll(domain[v]);
        pick = v;
      }
    if (fewest == 0) return false;
    for (int c = 1; c <= static_cast<int>(l.k); ++c) {
      std::uint64_t bit = std::uint64_t{1} << (c - 1);
      if (!(domain[pick] & bit)) continue;
      colour[pick] = c;
      std::vector<Vertex> touched;
      bool dead = false;
      for (Vertex w : g.neighbours(pick))
        if (!colour[w] && (domain[w] & bit)) {
          domain[w] &= ~bit;
          touched.push_back(w);
          if (!domain[w]) dead = true;
        }
      if (!dead && self(self, coloured + 1)) return true;
      for (Vertex w : touched) domain[w] |= bit;
      colour[pick] = 0;
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  return colour;
}

bool verify_colouring(const Graph& g, const ListAssignment& l, const std::vector<int>& c) {
  if (c.size() != g.order()) return false;
  for (Vertex v = 0; v < g.order(); ++v)
    if (std::find(l.lists[v].begin(), l.lists[v].end(), c[v]) == l.lists[v].end()) return false;
  for (auto [u, v] : g.edges())
    if (c[u] == c[v]) return false;
  return true;
}

std::size_t simwidth_oracle(const Graph& g, std::optional<std::size_t> cap) {
  return exact_width(g, WidthKind::sim, cap).width;
}

}  // namespace widthlab
