#include <algorithm>
#include <cstdlib>
#include <functional>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>

#include "widthlab/branchdec.hpp"
#include "widthlab/errors.hpp"

namespace widthlab {

namespace {

// Maximum bipartite matching between x and y along g's edges; an upper bound
// on any induced matching across (x, y).
std::size_t matching_number(const Graph& g, const Bitset& x, const Bitset& y) {
  std::vector<Vertex> mate(g.order(), static_cast<Vertex>(-1));
  std::vector<char> visited(g.order());
  std::function<bool(Vertex)> augment = [&](Vertex a) {
    for (Vertex b : g.neighbours(a)) {
      if (!y.test(b) || visited[b]) continue;
      visited[b] = 1;
      if (mate[b] == static_cast<Vertex>(-1) || augment(mate[b])) {
        mate[b] = a;
        return true;
      }
    }
    return false;
  };
  std::size_t size = 0;
  for (auto a = x.find_first(); a != Bitset::npos; a = x.find_next(a)) {
    std::fill(visited.begin(), visited.end(), 0);
    if (augment(static_cast<Vertex>(a))) ++size;
  }
  return size;
}

// Branches on the vertex of x with fewest live partners: either it is matched
// to one of them (killing the partners' conflicts) or it stays unmatched.
class InducedMatchingSearch {
 public:
  InducedMatchingSearch(const Graph& g, WidthKind kind, std::size_t ceiling)
      : g_(g), kind_(kind), ceiling_(ceiling) {}

  std::vector<Edge> run(Bitset x, Bitset y) {
    rec(std::move(x), std::move(y));
    return best_;
  }

 private:
  void rec(Bitset x, Bitset y) {
    if (best_.size() == ceiling_) return;
    Bitset live_y(g_.order());
    std::size_t live_x = 0;
    Vertex pick = 0;
    std::size_t pick_deg = std::numeric_limits<std::size_t>::max();
    for (auto a = x.find_first(); a != Bitset::npos; a = x.find_next(a)) {
      Bitset across = g_.row(static_cast<Vertex>(a)) & y;
      std::size_t d = across.count();
      if (d == 0) {
        x.reset(a);
        continue;
      }
      ++live_x;
      live_y |= across;
      if (d < pick_deg) {
        pick_deg = d;
        pick = static_cast<Vertex>(a);
      }
    }
    if (live_x == 0) {
      if (current_.size() > best_.size()) best_ = current_;
      return;
    }
    if (current_.size() + std::min(live_x, live_y.count()) <= best_.size()) return;

    Bitset partners = g_.row(pick) & live_y;
    for (auto b = partners.find_first(); b != Bitset::npos; b = partners.find_next(b)) {
      Bitset nx = x, ny = live_y;
      nx.reset(pick);
      ny.reset(b);
      nx -= g_.row(static_cast<Vertex>(b));
      ny -= g_.row(pick);
      if (kind_ == WidthKind::sim) {
        nx -= g_.row(pick);
        ny -= g_.row(static_cast<Vertex>(b));
      }
      current_.emplace_back(pick, static_cast<Vertex>(b));
      rec(std::move(nx), std::move(ny));
      current_.pop_back();
      if (best_.size() == ceiling_) return;
    }
    x.reset(pick);
    rec(std::move(x), std::move(live_y));
  }

  const Graph& g_;
  WidthKind kind_;
  std::size_t ceiling_;
  std::vector<Edge> current_, best_;
};

}  // namespace

std::vector<Edge> max_induced_matching(const Graph& g, const Bitset& x, const Bitset& y,
                                       WidthKind kind) {
  if (x.size() != g.order() || y.size() != g.order())
    throw std::invalid_argument("vertex set size does not match graph");
  if (x.intersects(y)) throw std::invalid_argument("cut sides overlap");
  std::size_t ceiling = matching_number(g, x, y);
  if (ceiling == 0) return {};
  auto m = InducedMatchingSearch(g, kind, ceiling).run(x, y);
  std::sort(m.begin(), m.end());
  return m;
}

std::size_t cut_value(const Graph& g, const Bitset& x, const Bitset& y, WidthKind kind) {
  return max_induced_matching(g, x, y, kind).size();
}

CutWidths cut_widths(const Graph& g, const Cut& c) {
  CutWidths w;
  w.cutmim = cut_value(g, c.side_a, c.side_b, WidthKind::mim);
  w.cutsim = w.cutmim <= 1 ? w.cutmim : cut_value(g, c.side_a, c.side_b, WidthKind::sim);
  return w;
}

WidthReport evaluate(const Graph& g, const BranchDecomposition& bd) {
  if (bd.vertex_count() != g.order())
    throw std::invalid_argument("decomposition does not match graph");
  WidthReport r;
  std::map<Bitset, CutWidths> memo;
  for (const auto& c : all_cuts(bd)) {
    const Bitset& key = c.side_a.test(0) ? c.side_a : c.side_b;
    auto it = memo.find(key);
    if (it == memo.end()) it = memo.emplace(key, cut_widths(g, c)).first;
    r.per_edge.push_back(it->second);
    r.mimw = std::max(r.mimw, it->second.cutmim);
    r.simw = std::max(r.simw, it->second.cutsim);
  }
  return r;
}

std::size_t evaluate_width(const Graph& g, const BranchDecomposition& bd, WidthKind kind) {
  if (bd.vertex_count() != g.order())
    throw std::invalid_argument("decomposition does not match graph");
  std::size_t w = 0;
  for (const auto& c : all_cuts(bd)) w = std::max(w, cut_value(g, c.side_a, c.side_b, kind));
  return w;
}

std::size_t exact_cap_from_env() {
  if (const char* env = std::getenv("WIDTHLAB_EXACT_CAP")) {
    try {
      std::size_t pos = 0;
      unsigned long v = std::stoul(env, &pos);
      if (pos == std::string(env).size() && v > 0) return v;
    } catch (const std::exception&) {
    }
    throw std::invalid_argument("WIDTHLAB_EXACT_CAP must be a positive integer");
  }
  return default_exact_cap;
}

namespace {

// Enumerates leaf-labelled ternary trees by inserting leaf k into each edge of
// a tree on leaves 0..k-1. Leaves are nodes 0..n-1, the first internal node is
// n and leaf k >= 3 brings internal node n+k-2. Cut values only grow as
// leaves are added, so a partial tree at least as wide as the best complete
// one is abandoned.
class ExactSearch {
 public:
  ExactSearch(const Graph& g, WidthKind kind) : g_(g), kind_(kind), n_(g.order()) {
    std::size_t states = 1;
    for (std::size_t i = 0; i < n_; ++i) states *= 3;
    memo_.assign(states, -1);
    ternary_.assign(std::size_t{1} << n_, 0);
    for (std::size_t mask = 1; mask < ternary_.size(); ++mask) {
      std::size_t low = static_cast<std::size_t>(__builtin_ctzll(mask));
      std::size_t p = 1;
      for (std::size_t i = 0; i < low; ++i) p *= 3;
      ternary_[mask] = ternary_[mask & (mask - 1)] + p;
    }
  }

  ExactWidth run() {
    const std::size_t edges = g_.size();
    floor_ = edges == 0 ? 0 : 1;
    std::vector<Vertex> identity(n_);
    for (Vertex v = 0; v < n_; ++v) identity[v] = v;
    std::size_t upper = evaluate_width(g_, caterpillar_decomposition(identity), kind_);
    best_ = upper + 1;

    auto c = static_cast<Node>(n_);
    std::vector<Slot> start{{0, c, 1u}, {1, c, 2u}, {2, c, 4u}};
    std::size_t w = 0;
    for (const auto& s : start) w = std::max(w, value(s.side, 7u & ~s.side));
    if (w < best_) rec(3, start, w);
    return {best_, BranchDecomposition(2 * n_ - 2, best_edges_, leaf_map())};
  }

 private:
  struct Slot {
    Node a, b;
    std::uint32_t side;  // leaves on a's side
  };

  std::size_t value(std::uint32_t a, std::uint32_t b) {
    std::size_t idx = ternary_[a] + 2 * ternary_[b];
    if (memo_[idx] < 0) {
      Bitset x(n_), y(n_);
      for (std::size_t i = 0; i < n_; ++i) {
        if (a >> i & 1u) x.set(i);
        if (b >> i & 1u) y.set(i);
      }
      memo_[idx] = static_cast<std::int8_t>(cut_value(g_, x, y, kind_));
    }
    return static_cast<std::size_t>(memo_[idx]);
  }

  void rec(std::size_t k, const std::vector<Slot>& tree, std::size_t width) {
    if (k == n_) {
      if (width < best_) {
        best_ = width;
        best_edges_.clear();
        for (const auto& s : tree) best_edges_.emplace_back(s.a, s.b);
      }
      return;
    }
    const std::uint32_t old_leaves = (1u << k) - 1, leaves = (1u << (k + 1)) - 1, bit = 1u << k;
    const auto m = static_cast<Node>(n_ + k - 2);
    std::vector<Slot> next;
    for (std::size_t e = 0; e < tree.size(); ++e) {
      const Slot& split = tree[e];
      next = tree;
      for (std::size_t f = 0; f < next.size(); ++f) {
        if (f == e) continue;
        std::uint32_t sf = next[f].side;
        if ((split.side & ~sf) == 0 || ((old_leaves & ~split.side) & ~sf) == 0) next[f].side |= bit;
      }
      next[e] = {split.a, m, split.side};
      next.push_back({m, split.b, split.side | bit});
      next.push_back({static_cast<Node>(k), m, bit});
      std::size_t w = 0;
      for (const auto& s : next) {
        w = std::max(w, value(s.side, leaves & ~s.side));
        if (w >= best_) break;
      }
      if (w < best_) rec(k + 1, next, w);
      if (best_ <= floor_) return;
    }
  }

  std::vector<std::pair<Node, Vertex>> leaf_map() const {
    std::vector<std::pair<Node, Vertex>> lm;
    for (Vertex v = 0; v < n_; ++v) lm.emplace_back(v, v);
    return lm;
  }

  const Graph& g_;
  WidthKind kind_;
  std::size_t n_;
  std::vector<std::int8_t> memo_;
  std::vector<std::size_t> ternary_;
  std::size_t floor_ = 0, best_ = 0;
  std::vector<TreeEdge> best_edges_;
};

}  // namespace

ExactWidth exact_width(const Graph& g, WidthKind kind, std::optional<std::size_t> cap) {
  std::size_t limit = cap ? *cap : exact_cap_from_env();
  const std::size_t n = g.order();
  if (n > limit)
    throw CapExceeded("exact width search limited to " + std::to_string(limit) +
                      " vertices, graph has " + std::to_string(n));
  if (n > 20) throw CapExceeded("exact width search cannot index more than 20 vertices");
  if (n == 0) throw std::invalid_argument("exact width of the null graph is undefined");
  if (n == 1) return {0, BranchDecomposition(1, {}, {{0, 0}})};
  if (n == 2) {
    BranchDecomposition bd(2, {{0, 1}}, {{0, 0}, {1, 1}});
    return {g.size(), std::move(bd)};
  }
  return ExactSearch(g, kind).run();
}

}  // namespace widthlab
