#include "widthlab/families.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <stdexcept>

#include "widthlab/errors.hpp"

namespace widthlab {

namespace {

using CoordEdge = std::pair<Coordinate, Coordinate>;

std::string label_of(Coordinate c) {
  return "(" + std::to_string(c.first) + "," + std::to_string(c.second) + ")";
}

Graph from_points(std::vector<Coordinate> pts, const std::vector<CoordEdge>& edges) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::map<Coordinate, Vertex> id;
  std::vector<std::string> labels;
  for (const auto& p : pts) {
    id.emplace(p, static_cast<Vertex>(labels.size()));
    labels.push_back(label_of(p));
  }
  std::vector<Edge> e;
  for (const auto& [a, b] : edges) e.emplace_back(id.at(a), id.at(b));
  return Graph(pts.size(), e, std::move(labels));
}

int mod(int a, int m) { return ((a % m) + m) % m; }

void require_positive(std::size_t x, const char* what) {
  if (x == 0) throw std::invalid_argument(std::string(what) + " must be at least 1");
}

}  // namespace

std::vector<Coordinate> coordinates(const Graph& g) {
  if (g.order() > 0 && !g.has_labels())
    throw std::invalid_argument("graph carries no coordinate labels");
  std::vector<Coordinate> out;
  for (const auto& l : g.labels()) {
    int i = 0, j = 0;
    if (std::sscanf(l.c_str(), "(%d,%d)", &i, &j) != 2)
      throw std::invalid_argument("label is not a coordinate: " + l);
    out.emplace_back(i, j);
  }
  return out;
}

Graph elementary_wall(std::size_t h, std::size_t r) {
  require_positive(h, "wall height");
  require_positive(r, "wall width");
  const int rows = static_cast<int>(h), cols = static_cast<int>(2 * r);
  std::vector<CoordEdge> edges;
  for (int i = 1; i <= rows; ++i)
    for (int j = 1; j <= cols; ++j) {
      if (j < cols) edges.push_back({{i, j}, {i, j + 1}});
      if (i < rows && mod(i, 2) == mod(j, 2)) edges.push_back({{i, j}, {i + 1, j}});
    }
  std::map<Coordinate, int> degree;
  for (const auto& [a, b] : edges) {
    ++degree[a];
    ++degree[b];
  }
  std::vector<Coordinate> pts;
  for (int i = 1; i <= rows; ++i)
    for (int j = 1; j <= cols; ++j)
      if (degree[{i, j}] != 1) pts.emplace_back(i, j);
  std::erase_if(edges, [&](const CoordEdge& e) {
    return degree[e.first] == 1 || degree[e.second] == 1;
  });
  return from_points(std::move(pts), edges);
}

ColouredGraph wall_colouring(const Graph& wall, int k) {
  if (k < 2 || k > 4) throw std::invalid_argument("wall colourings exist for k = 2, 3, 4");
  ColouredGraph cg{wall, {}};
  for (auto [i, j] : coordinates(wall))
    cg.colouring.push_back(k == 4 ? mod(2 * i + j, 4) : mod(i + j, k));
  return cg;
}

Graph complete_colour_classes(const ColouredGraph& cg) {
  const Graph& g = cg.graph;
  if (cg.colouring.size() != g.order()) throw std::invalid_argument("colouring size mismatch");
  for (auto [u, v] : g.edges())
    if (cg.colouring[u] == cg.colouring[v])
      throw std::invalid_argument("colouring is not proper");
  std::vector<Edge> extra;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (cg.colouring[u] == cg.colouring[v]) extra.emplace_back(u, v);
  return add_edges(g, extra);
}

Graph completed_wall(std::size_t h, std::size_t r, int k) {
  return complete_colour_classes(wall_colouring(elementary_wall(h, r), k));
}

Graph wn_graph(std::size_t n) {
  require_positive(n, "n");
  const int m = static_cast<int>(2 * n);
  std::vector<Coordinate> pts;
  std::vector<CoordEdge> edges;
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j) {
      pts.emplace_back(i, j);
      if (i < m) edges.push_back({{i, j}, {i + 1, j}});
      // (i,j+1)(i,j) is removed exactly when i+j+1 is odd.
      if (j < m && mod(i + j, 2) == 1) edges.push_back({{i, j}, {i, j + 1}});
    }
  return from_points(std::move(pts), edges);
}

ColouredGraph wn_classes(std::size_t n) {
  ColouredGraph cg{wn_graph(n), {}};
  for (auto [i, j] : coordinates(cg.graph)) {
    int residue = mod(i, 3);
    int within = residue == 0 ? 2 : residue - 1;
    cg.colouring.push_back(3 * mod(i + j, 2) + within);
  }
  return cg;
}

Graph w5_family(std::size_t n) {
  ColouredGraph cg = wn_classes(n);
  const Graph& g = cg.graph;
  for (Vertex v = 0; v < g.order(); ++v) {
    int seen[6] = {};
    for (Vertex w : g.neighbours(v))
      if (++seen[cg.colouring[w]] > 1)
        throw InvariantViolation("vertex " + g.label(v) +
                                 " has two neighbours in one class of the other colour");
  }
  std::vector<Edge> extra;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v) {
      int a = cg.colouring[u], b = cg.colouring[v];
      if (a != b && a / 3 == b / 3) extra.emplace_back(u, v);
    }
  return add_edges(g, extra);
}

ColouredGraph w4_base(std::size_t n) {
  Graph wn = wn_graph(n);
  auto c = coordinates(wn);
  std::vector<Coordinate> pts;
  std::vector<CoordEdge> edges;
  for (auto [i, j] : c) pts.emplace_back(2 * i, 2 * j);
  for (auto [u, v] : wn.edges()) {
    Coordinate a{2 * c[u].first, 2 * c[u].second}, b{2 * c[v].first, 2 * c[v].second};
    Coordinate mid{c[u].first + c[v].first, c[u].second + c[v].second};
    pts.push_back(mid);
    edges.push_back({a, mid});
    edges.push_back({mid, b});
  }
  ColouredGraph cg{from_points(std::move(pts), edges), {}};
  for (auto [i, j] : coordinates(cg.graph)) {
    if (mod(i + j, 2) == 0) {
      cg.colouring.push_back(mod(i + j, 4) == 2 ? 0 : 1);
    } else {
      int residue = mod(i, 3);
      cg.colouring.push_back(2 + (residue == 0 ? 2 : residue - 1));
    }
  }
  return cg;
}

Graph w4_family(std::size_t n) {
  ColouredGraph cg = w4_base(n);
  const Graph& g = cg.graph;
  auto c = coordinates(g);
  std::vector<Edge> extra;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v) {
      int a = cg.colouring[u], b = cg.colouring[v];
      if (a + b == 1) {
        extra.emplace_back(u, v);
      } else if (a >= 2 && b >= 2 && a != b) {
        bool skip = c[u].second == c[v].second && std::abs(c[u].first - c[v].first) == 2;
        if (!skip) extra.emplace_back(u, v);
      }
    }
  return add_edges(g, extra);
}

bool residue_properties_hold(const ColouredGraph& base) {
  auto c = coordinates(base.graph);
  for (Vertex u = 0; u < base.graph.order(); ++u)
    for (Vertex v = u + 1; v < base.graph.order(); ++v) {
      if (base.colouring[u] < 2 || base.colouring[u] != base.colouring[v]) continue;
      int di = std::abs(c[u].first - c[v].first), dj = std::abs(c[u].second - c[v].second);
      if (di % 3 != 0) return false;
      if (di == 0 && dj % 2 != 0) return false;
    }
  return true;
}

Graph generate_family(std::string_view family, const std::vector<std::size_t>& params) {
  auto need = [&](std::size_t k) {
    if (params.size() != k)
      throw std::invalid_argument(std::string(family) + " takes " + std::to_string(k) +
                                  " parameter(s)");
  };
  if (family == "wall") {
    need(2);
    return elementary_wall(params[0], params[1]);
  }
  if (family == "fW" || family == "gW" || family == "hW") {
    need(2);
    int k = family == "fW" ? 2 : family == "gW" ? 3 : 4;
    return completed_wall(params[0], params[1], k);
  }
  need(1);
  if (family == "wn") return wn_graph(params[0]);
  if (family == "w5") return w5_family(params[0]);
  if (family == "w4") return w4_family(params[0]);
  throw std::invalid_argument("unknown family: " + std::string(family));
}

std::vector<FreenessClaim> freeness_suite(std::string_view family) {
  using namespace pattern;
  auto claim = [](PatternSpec p) { return FreenessClaim{to_string(p) + "-free", p}; };
  if (family == "fW") return {claim({Edgeless{3}}), claim({CoBicliquePlusUniversal{4, 4}})};
  if (family == "gW") return {claim({Edgeless{4}}), claim({CoBicliquePlusUniversal{3, 3}})};
  if (family == "hW") return {claim({Edgeless{5}}), claim({CoBicliquePlusUniversal{2, 2}})};
  if (family == "w5") return {claim({Clique{5}}), claim({LinearForest{1, 1, 1}})};
  if (family == "w4")
    return {claim({Clique{4}}), claim({LinearForest{1, 2, 1}}), claim({LinearForest{0, 1, 2}})};
  if (family == "wall" || family == "wn") return {};
  throw std::invalid_argument("unknown family: " + std::string(family));
}

std::vector<ClaimVerdict> verify_family(std::string_view family, const Graph& g) {
  std::vector<ClaimVerdict> out;
  if (family == "wall") out.push_back({"maximum degree at most 3", g.max_degree() <= 3, {}});
  for (const auto& c : freeness_suite(family)) {
    auto hit = contains_induced(g, c.pattern);
    out.push_back({c.claim, !hit, hit.value_or(Embedding{})});
  }
  return out;
}

}  // namespace widthlab
