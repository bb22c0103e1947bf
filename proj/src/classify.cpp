#include "widthlab/classify.hpp"

#include <algorithm>
#include <stdexcept>

#include "widthlab/errors.hpp"
#include "widthlab/patterns.hpp"

namespace widthlab {

namespace {

constexpr std::size_t ramsey_argument_cap = 100000;

std::size_t ramsey_argument(const BigInt& v) {
  if (v > ramsey_argument_cap)
    throw CapExceeded("Ramsey argument " + v.str() + " exceeds " +
                      std::to_string(ramsey_argument_cap));
  return static_cast<std::size_t>(v);
}

ClassificationOutcome outcome(Verdict v, std::string bullet, std::string evidence) {
  return {v, std::move(bullet), v == Verdict::bounded, std::move(evidence)};
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::bounded: return "bounded";
    case Verdict::unbounded: return "unbounded";
    case Verdict::open: return "open";
  }
  return "open";
}

ClassificationOutcome classify_edgeless(std::size_t r, std::size_t s, std::size_t t) {
  if (r < 3 || s < 2 || t < 2) throw std::invalid_argument("need r >= 3 and s, t >= 2");
  const std::size_t low = std::min(s, t);
  if (r == 3) {
    if (low <= 3) return outcome(Verdict::bounded, "edgeless/r3-bounded", "decompose_3p1");
    return outcome(Verdict::unbounded, "edgeless/r3-unbounded", "fW");
  }
  if (r == 4) {
    if (low <= 2) return outcome(Verdict::bounded, "edgeless/r4-bounded", "decompose_4p1");
    return outcome(Verdict::unbounded, "edgeless/r4-unbounded", "gW");
  }
  return outcome(Verdict::unbounded, "edgeless/r5-unbounded", "hW");
}

bool linear_forest_contains(LinearForestCounts big, LinearForestCounts small) {
  // P3s only fit in P3s. P2s go to P2s first, since a spare P3 holds two
  // isolated vertices (its ends) and a spare P2 only one.
  if (small.u > big.u) return false;
  std::size_t p3_left = big.u - small.u;
  std::size_t in_p2 = std::min(small.t, big.t);
  std::size_t in_p3 = small.t - in_p2;
  if (in_p3 > p3_left) return false;
  p3_left -= in_p3;
  std::size_t slots = big.s + (big.t - in_p2) + 2 * p3_left;
  return small.s <= slots;
}

ClassificationOutcome classify_complete(std::size_t r, LinearForestCounts h) {
  if (r < 4) throw std::invalid_argument("need r >= 4");
  if (h.s + h.t + h.u == 0) throw std::invalid_argument("H must have a vertex");
  const std::string tag = r == 4 ? "complete/r4-" : "complete/r5-";
  if (linear_forest_contains({h.s, h.t, 0}, h) || linear_forest_contains({h.s, 0, 1}, h))
    return outcome(Verdict::bounded, tag + "bounded", "");
  if (r >= 5) {
    if (linear_forest_contains(h, {1, 1, 1}))
      return outcome(Verdict::unbounded, tag + "unbounded", "w5");
    return outcome(Verdict::open, tag + "open", "");
  }
  if (linear_forest_contains(h, {1, 2, 1}) || linear_forest_contains(h, {0, 1, 2}))
    return outcome(Verdict::unbounded, tag + "unbounded", "w4");
  return outcome(Verdict::open, tag + "open", "");
}

CliqueFreeBound cliquefree_bound(std::size_t w, std::size_t t) {
  if (t < 2) throw std::invalid_argument("t must be at least 2");
  CliqueFreeBound b;
  b.chain.push_back(ramsey(w + 1, t));
  b.chain.push_back(ramsey(t, t));
  b.chain.push_back(
      ramsey(ramsey_argument(b.chain[0].value), ramsey_argument(b.chain[1].value)));
  b.value = b.chain.back().value;
  return b;
}

PipelineResult list_colouring_pipeline(const Graph& g, const ListAssignment& lists,
                                       const BranchDecomposition& bd) {
  validate(g, lists);
  if (bd.vertex_count() != g.order())
    throw std::invalid_argument("decomposition does not match the graph");
  PipelineResult res;
  if (auto k = contains_induced(g, PatternSpec{pattern::Clique{lists.k + 1}})) {
    res.clique = *k;
    std::sort(res.clique.begin(), res.clique.end());
    res.note = "contains K" + std::to_string(lists.k + 1);
    return res;
  }
  res.simw = g.order() > 0 ? evaluate_width(g, bd, WidthKind::sim) : 0;
  try {
    res.mim_bound = cliquefree_bound(res.simw, lists.k + 1);
  } catch (const CapExceeded& e) {
    res.note = std::string("mim-width bound not computed: ") + e.what();
  }
  res.colouring = list_colouring_oracle(g, lists);
  res.feasible = res.colouring.has_value();
  return res;
}

}  // namespace widthlab
