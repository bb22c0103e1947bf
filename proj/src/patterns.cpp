#include "widthlab/patterns.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <regex>
#include <stdexcept>

namespace widthlab {

namespace {

using namespace pattern;

std::size_t positive(std::size_t v, const char* what) {
  if (v == 0) throw std::invalid_argument(std::string(what) + " needs a positive parameter");
  return v;
}

Graph linear_forest_graph(const std::map<std::size_t, std::size_t, std::greater<>>& paths) {
  Graph out;
  for (auto [len, count] : paths) {
    std::vector<long long> p{static_cast<long long>(len)};
    out = disjoint_union(out, disjoint_copies(build_named("P", p), count));
  }
  return out;
}

std::string linear_forest_name(const std::map<std::size_t, std::size_t, std::greater<>>& paths) {
  std::string out;
  for (auto [len, count] : paths) {
    if (count == 0) continue;
    if (!out.empty()) out += "+";
    if (count > 1) out += std::to_string(count);
    out += "P" + std::to_string(len);
  }
  return out;
}

Graph edges_graph(std::size_t n, const std::vector<Edge>& e) { return Graph(n, e); }

}  // namespace

Graph realize(const PatternSpec& p) {
  return std::visit(
      [](const auto& k) -> Graph {
        using T = std::decay_t<decltype(k)>;
        std::vector<Edge> e;
        if constexpr (std::is_same_v<T, Clique>) {
          long long r = static_cast<long long>(positive(k.r, "clique"));
          return build_named("K", std::span<const long long>(&r, 1));
        } else if constexpr (std::is_same_v<T, Edgeless>) {
          return Graph(positive(k.r, "edgeless pattern"));
        } else if constexpr (std::is_same_v<T, LinearForest>) {
          if (k.s + k.t + k.u == 0) throw std::invalid_argument("empty linear forest");
          return linear_forest_graph({{3, k.u}, {2, k.t}, {1, k.s}});
        } else if constexpr (std::is_same_v<T, CoBicliquePlusUniversal>) {
          std::size_t s = positive(k.s, "co-biclique"), t = positive(k.t, "co-biclique");
          auto n = static_cast<Vertex>(1 + s + t);
          for (Vertex v = 1; v < n; ++v) e.emplace_back(0, v);
          for (Vertex a = 1; a <= s; ++a)
            for (Vertex b = a + 1; b <= s; ++b) e.emplace_back(a, b);
          for (Vertex a = static_cast<Vertex>(s + 1); a < n; ++a)
            for (Vertex b = a + 1; b < n; ++b) e.emplace_back(a, b);
          return edges_graph(n, e);
        } else if constexpr (std::is_same_v<T, SubdividedStar>) {
          auto s = static_cast<Vertex>(positive(k.s, "subdivided star"));
          for (Vertex i = 1; i <= s; ++i) {
            e.emplace_back(0, i);
            e.emplace_back(i, s + i);
          }
          return edges_graph(2 * s + 1, e);
        } else if constexpr (std::is_same_v<T, MatchedCliques> ||
                             std::is_same_v<T, MatchedCliqueStable>) {
          auto t = static_cast<Vertex>(positive(k.t, "matched pattern"));
          for (Vertex i = 0; i < t; ++i) {
            e.emplace_back(i, t + i);
            for (Vertex j = i + 1; j < t; ++j) {
              e.emplace_back(i, j);
              if constexpr (std::is_same_v<T, MatchedCliques>) e.emplace_back(t + i, t + j);
            }
          }
          return edges_graph(2 * t, e);
        } else {
          return k.graph;
        }
      },
      p.kind);
}

PatternSpec parse_pattern(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  std::smatch m;
  auto num = [&](int i) { return static_cast<std::size_t>(std::stoull(m[i].str())); };
  auto fail = [&]() -> PatternSpec {
    throw std::invalid_argument("cannot parse pattern: " + std::string(text));
  };
  static const std::regex co_re(R"(co\(K\[(\d+),(\d+)\]\+P1\))");
  static const std::regex box_re(R"(K(\d+)box([KS])(\d+))");
  static const std::regex star_re(R"(K1-(\d+)-subdiv)");
  static const std::regex bic_re(R"(K\[(\d+),(\d+)\])");
  static const std::regex cyc_re(R"(C(\d+))");
  static const std::regex clq_re(R"(K(\d+))");
  static const std::regex term_re(R"((\d*)P(\d+))");
  try {
    if (std::regex_match(s, m, co_re)) return {CoBicliquePlusUniversal{num(1), num(2)}};
    if (std::regex_match(s, m, box_re)) {
      if (num(1) != num(3)) return fail();
      if (m[2] == "K") return {MatchedCliques{num(1)}};
      return {MatchedCliqueStable{num(1)}};
    }
    if (std::regex_match(s, m, star_re)) return {SubdividedStar{num(1)}};
    if (std::regex_match(s, m, bic_re)) {
      std::vector<long long> p{static_cast<long long>(num(1)), static_cast<long long>(num(2))};
      return {Explicit{build_named("biclique", p), "K[" + m[1].str() + "," + m[2].str() + "]"}};
    }
    if (std::regex_match(s, m, cyc_re)) {
      std::vector<long long> p{static_cast<long long>(num(1))};
      return {Explicit{build_named("C", p), "C" + m[1].str()}};
    }
    if (std::regex_match(s, m, clq_re)) return {Clique{num(1)}};

    std::map<std::size_t, std::size_t, std::greater<>> paths;
    std::size_t start = 0;
    while (start <= s.size()) {
      auto end = s.find('+', start);
      if (end == std::string::npos) end = s.size();
      std::string term = s.substr(start, end - start);
      if (!std::regex_match(term, m, term_re)) return fail();
      std::size_t count = m[1].str().empty() ? 1 : num(1);
      std::size_t len = num(2);
      if (count == 0 || len == 0) return fail();
      paths[len] += count;
      start = end + 1;
    }
    if (paths.empty()) return fail();
    if (paths.begin()->first > 3) return {Explicit{linear_forest_graph(paths), linear_forest_name(paths)}};
    if (paths.size() == 1 && paths.count(1)) return {Edgeless{paths[1]}};
    return {LinearForest{paths[1], paths[2], paths[3]}};
  } catch (const std::out_of_range&) {
    return fail();
  }
}

std::vector<PatternSpec> parse_pattern_list(std::string_view text) {
  std::vector<PatternSpec> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size() && (text[i] == '(' || text[i] == '[')) ++depth;
    if (i < text.size() && (text[i] == ')' || text[i] == ']')) --depth;
    if (i == text.size() || (text[i] == ',' && depth == 0)) {
      out.push_back(parse_pattern(text.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

std::string to_string(const PatternSpec& p) {
  return std::visit(
      [](const auto& k) -> std::string {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, Clique>) {
          return "K" + std::to_string(k.r);
        } else if constexpr (std::is_same_v<T, Edgeless>) {
          return (k.r > 1 ? std::to_string(k.r) : "") + "P1";
        } else if constexpr (std::is_same_v<T, LinearForest>) {
          return linear_forest_name({{3, k.u}, {2, k.t}, {1, k.s}});
        } else if constexpr (std::is_same_v<T, CoBicliquePlusUniversal>) {
          return "co(K[" + std::to_string(k.s) + "," + std::to_string(k.t) + "]+P1)";
        } else if constexpr (std::is_same_v<T, SubdividedStar>) {
          return "K1-" + std::to_string(k.s) + "-subdiv";
        } else if constexpr (std::is_same_v<T, MatchedCliques>) {
          return "K" + std::to_string(k.t) + "boxK" + std::to_string(k.t);
        } else if constexpr (std::is_same_v<T, MatchedCliqueStable>) {
          return "K" + std::to_string(k.t) + "boxS" + std::to_string(k.t);
        } else {
          return k.name;
        }
      },
      p.kind);
}

namespace {

// Backtracking plan for one pattern: vertex order, degree filters and
// symmetry-breaking links (image of position k must exceed that of after[k]).
struct Plan {
  std::vector<Vertex> order;
  std::vector<int> after;
  std::vector<std::vector<char>> adj;  // adj[k][j] for j < k, by position
  std::vector<std::size_t> degree;
};

Plan make_plan(const Graph& p) {
  const std::size_t n = p.order();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<Vertex>> comps;
  for (Vertex s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<Vertex> members{s};
    comp[s] = static_cast<int>(comps.size());
    for (std::size_t i = 0; i < members.size(); ++i)
      for (Vertex w : p.neighbours(members[i]))
        if (comp[w] < 0) {
          comp[w] = comp[s];
          members.push_back(w);
        }
    comps.push_back(std::move(members));
  }
  std::stable_sort(comps.begin(), comps.end(),
                   [](const auto& a, const auto& b) { return a.size() > b.size(); });

  Plan plan;
  std::vector<std::pair<std::size_t, std::size_t>> ranges;
  for (auto& members : comps) {
    Vertex root = *std::max_element(members.begin(), members.end(), [&](Vertex a, Vertex b) {
      return p.degree(a) < p.degree(b) || (p.degree(a) == p.degree(b) && a > b);
    });
    std::size_t begin = plan.order.size();
    std::vector<char> seen(n, 0);
    plan.order.push_back(root);
    seen[root] = 1;
    for (std::size_t i = begin; i < plan.order.size(); ++i)
      for (Vertex w : p.neighbours(plan.order[i]))
        if (!seen[w]) {
          seen[w] = 1;
          plan.order.push_back(w);
        }
    ranges.emplace_back(begin, plan.order.size());
  }

  plan.after.assign(n, -1);
  plan.adj.resize(n);
  plan.degree.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    plan.degree[k] = p.degree(plan.order[k]);
    for (std::size_t j = 0; j < k; ++j) plan.adj[k].push_back(p.adjacent(plan.order[k], plan.order[j]));
  }
  auto twins = [&](Vertex a, Vertex b) {
    Bitset ra = p.row(a), rb = p.row(b);
    ra.reset(b);
    rb.reset(a);
    return ra == rb;
  };
  for (auto [begin, end] : ranges)
    for (std::size_t k = begin + 1; k < end; ++k)
      for (std::size_t j = k; j-- > begin;)
        if (twins(plan.order[k], plan.order[j])) {
          plan.after[k] = static_cast<int>(j);
          break;
        }
  for (std::size_t c = 1; c < ranges.size(); ++c) {
    auto [b1, e1] = ranges[c - 1];
    auto [b2, e2] = ranges[c];
    if (e1 - b1 != e2 - b2) continue;
    bool same = true;
    for (std::size_t x = 0; x < e1 - b1 && same; ++x)
      for (std::size_t y = 0; y < x && same; ++y)
        same = p.adjacent(plan.order[b1 + x], plan.order[b1 + y]) ==
               p.adjacent(plan.order[b2 + x], plan.order[b2 + y]);
    if (same) plan.after[b2] = static_cast<int>(b1);
  }
  return plan;
}

class Matcher {
 public:
  Matcher(const Graph& g, const Plan& plan)
      : g_(g), plan_(plan), phi_(plan.order.size()), cand_(plan.order.size(), Bitset(g.order())),
        used_(g.order()) {
    for (std::size_t k = 0; k < plan.order.size(); ++k) {
      Bitset base(g.order());
      for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) >= plan.degree[k]) base.set(v);
      base_.push_back(std::move(base));
    }
  }

  bool run() { return rec(0); }
  const std::vector<Vertex>& images() const { return phi_; }

 private:
  bool rec(std::size_t k) {
    if (k == plan_.order.size()) return true;
    Bitset& cand = cand_[k];
    cand = base_[k];
    cand -= used_;
    for (std::size_t j = 0; j < k && cand.any(); ++j) {
      if (plan_.adj[k][j])
        cand &= g_.row(phi_[j]);
      else
        cand -= g_.row(phi_[j]);
    }
    std::size_t v = plan_.after[k] >= 0 ? cand.find_next(phi_[plan_.after[k]]) : cand.find_first();
    for (; v != Bitset::npos; v = cand.find_next(v)) {
      phi_[k] = static_cast<Vertex>(v);
      used_.set(v);
      if (rec(k + 1)) return true;
      used_.reset(v);
    }
    return false;
  }

  const Graph& g_;
  const Plan& plan_;
  std::vector<Vertex> phi_;
  std::vector<Bitset> cand_;
  std::vector<Bitset> base_;
  Bitset used_;
};

}  // namespace

std::optional<Embedding> contains_induced(const Graph& g, const Graph& pattern) {
  if (pattern.order() > g.order()) return std::nullopt;
  Plan plan = make_plan(pattern);
  Matcher matcher(g, plan);
  if (!matcher.run()) return std::nullopt;
  Embedding phi(pattern.order());
  for (std::size_t k = 0; k < plan.order.size(); ++k) phi[plan.order[k]] = matcher.images()[k];
  return phi;
}

std::optional<Embedding> contains_induced(const Graph& g, const PatternSpec& p) {
  return contains_induced(g, realize(p));
}

namespace {

struct ForestSearch {
  const Graph& g;
  std::vector<std::vector<Vertex>> pieces;  // candidate components, grouped by kind
  std::vector<std::size_t> kind_begin;      // first index of each kind in pieces
  std::vector<std::size_t> need;            // kind of each slot
  std::vector<std::size_t> chosen;
  Bitset blocked;

  bool rec(std::size_t slot, std::size_t from) {
    if (slot == need.size()) return true;
    std::size_t kind = need[slot];
    if (slot == 0 || need[slot - 1] != kind) from = kind_begin[kind];
    std::size_t end = kind_begin[kind + 1];
    for (std::size_t i = from; i < end; ++i) {
      const auto& piece = pieces[i];
      bool ok = std::none_of(piece.begin(), piece.end(), [&](Vertex v) { return blocked.test(v); });
      if (!ok) continue;
      Bitset saved = blocked;
      for (Vertex v : piece) {
        blocked.set(v);
        blocked |= g.row(v);
      }
      chosen[slot] = i;
      if (rec(slot + 1, i + 1)) return true;
      blocked = std::move(saved);
    }
    return false;
  }
};

}  // namespace

std::optional<Embedding> find_linear_forest(const Graph& g, std::size_t s, std::size_t t,
                                            std::size_t u) {
  ForestSearch fs{g, {}, {}, {}, {}, Bitset(g.order())};
  fs.kind_begin.push_back(0);
  for (Vertex b = 0; b < g.order(); ++b) {
    auto nb = g.neighbours(b);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j)
        if (!g.adjacent(nb[i], nb[j])) fs.pieces.push_back({nb[i], b, nb[j]});
  }
  fs.kind_begin.push_back(fs.pieces.size());
  for (auto [a, b] : g.edges()) fs.pieces.push_back({a, b});
  fs.kind_begin.push_back(fs.pieces.size());
  for (Vertex v = 0; v < g.order(); ++v) fs.pieces.push_back({v});
  fs.kind_begin.push_back(fs.pieces.size());
  fs.need.insert(fs.need.end(), u, 0);
  fs.need.insert(fs.need.end(), t, 1);
  fs.need.insert(fs.need.end(), s, 2);
  fs.chosen.resize(fs.need.size());
  if (!fs.rec(0, 0)) return std::nullopt;
  Embedding phi;
  for (std::size_t i : fs.chosen) phi.insert(phi.end(), fs.pieces[i].begin(), fs.pieces[i].end());
  return phi;
}

FreenessVerdict is_free(const Graph& g, std::span<const PatternSpec> ps) {
  for (std::size_t i = 0; i < ps.size(); ++i)
    if (auto phi = contains_induced(g, ps[i])) return {false, i, std::move(*phi)};
  return {};
}

bool verify_embedding(const Graph& g, const Graph& pattern, std::span<const Vertex> phi) {
  if (phi.size() != pattern.order()) return false;
  for (std::size_t a = 0; a < phi.size(); ++a) {
    if (phi[a] >= g.order()) return false;
    for (std::size_t b = a + 1; b < phi.size(); ++b) {
      if (phi[a] == phi[b]) return false;
      if (g.adjacent(phi[a], phi[b]) !=
          pattern.adjacent(static_cast<Vertex>(a), static_cast<Vertex>(b)))
        return false;
    }
  }
  return true;
}

namespace {

// Branch and bound with greedy colouring bounds.
class CliqueSearch {
 public:
  explicit CliqueSearch(const Graph& g) : g_(g) {}

  std::vector<Vertex> run() {
    expand(g_.full_set());
    return best_;
  }

 private:
  void expand(Bitset p) {
    std::vector<Vertex> order;
    std::vector<std::size_t> bound;
    colour(p, order, bound);
    for (std::size_t i = order.size(); i-- > 0;) {
      if (current_.size() + bound[i] <= best_.size()) return;
      Vertex v = order[i];
      current_.push_back(v);
      Bitset next = p & g_.row(v);
      if (next.none()) {
        if (current_.size() > best_.size()) best_ = current_;
      } else {
        expand(std::move(next));
      }
      current_.pop_back();
      p.reset(v);
    }
  }

  void colour(Bitset p, std::vector<Vertex>& order, std::vector<std::size_t>& bound) const {
    std::size_t k = 0;
    while (p.any()) {
      ++k;
      Bitset q = p;
      for (auto v = q.find_first(); v != Bitset::npos; v = q.find_first()) {
        q.reset(v);
        q -= g_.row(static_cast<Vertex>(v));
        p.reset(v);
        order.push_back(static_cast<Vertex>(v));
        bound.push_back(k);
      }
    }
  }

  const Graph& g_;
  std::vector<Vertex> current_, best_;
};

}  // namespace

std::vector<Vertex> maximum_clique(const Graph& g) {
  auto c = CliqueSearch(g).run();
  std::sort(c.begin(), c.end());
  return c;
}

std::vector<Vertex> maximum_independent_set(const Graph& g) {
  return maximum_clique(complement(g));
}

std::size_t clique_number(const Graph& g) { return maximum_clique(g).size(); }
std::size_t independence_number(const Graph& g) { return maximum_clique(complement(g)).size(); }

}  // namespace widthlab
