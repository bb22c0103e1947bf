#include "graph_enum.hpp"

#include <algorithm>
#include <map>

#include "widthlab/patterns.hpp"

namespace enumeration {

using widthlab::Edge;
using widthlab::Graph;
using widthlab::Vertex;

namespace {

// Isomorphism-invariant fingerprint: per vertex (degree, sorted neighbour
// degrees, triangles through it), sorted.
std::vector<std::vector<std::size_t>> fingerprint(const Graph& g) {
  std::vector<std::vector<std::size_t>> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    std::vector<std::size_t> nd;
    std::size_t tri = 0;
    for (Vertex w : g.neighbours(v)) {
      nd.push_back(g.degree(w));
      tri += (g.row(v) & g.row(w)).count();
    }
    std::sort(nd.begin(), nd.end());
    nd.insert(nd.begin(), {g.degree(v), tri});
    out.push_back(std::move(nd));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

const std::vector<Graph>& all_graphs(std::size_t n) {
  static std::map<std::size_t, std::vector<Graph>> cache;
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  std::vector<Graph> out;
  if (n == 0) {
    out.emplace_back(0);
  } else {
    std::map<std::vector<std::vector<std::size_t>>, std::vector<std::size_t>> buckets;
    for (const Graph& base : all_graphs(n - 1)) {
      auto edges = base.edges();
      for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
        auto e = edges;
        for (Vertex u = 0; u + 1 < n; ++u)
          if (mask >> u & 1u) e.emplace_back(u, Vertex(n - 1));
        Graph g(n, e);
        auto& bucket = buckets[fingerprint(g)];
        bool seen = std::any_of(bucket.begin(), bucket.end(), [&](std::size_t i) {
          return out[i].size() == g.size() && widthlab::contains_induced(out[i], g).has_value();
        });
        if (!seen) {
          bucket.push_back(out.size());
          out.push_back(std::move(g));
        }
      }
    }
  }
  return cache.emplace(n, std::move(out)).first->second;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  std::vector<char> seen(g.order(), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbours(v))
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  return count == g.order();
}

std::vector<Graph> connected_graphs(std::size_t n) {
  std::vector<Graph> out;
  for (const auto& g : all_graphs(n))
    if (is_connected(g)) out.push_back(g);
  return out;
}

}  // namespace enumeration
