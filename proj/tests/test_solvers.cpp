#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "graph_enum.hpp"
#include "oracles.hpp"
#include "widthlab/solvers.hpp"

using namespace widthlab;

namespace {
Graph named(std::string_view name, std::vector<long long> p) { return build_named(name, p); }

WeightedInstance with_weights(const Graph& g, std::vector<long long> w) {
  WeightedInstance inst{g, {}};
  for (auto x : w) inst.weights.emplace_back(x);
  return inst;
}

std::vector<std::int64_t> scaled(const WeightedInstance& inst, std::int64_t den) {
  std::vector<std::int64_t> out;
  for (const auto& w : inst.weights) out.push_back(static_cast<std::int64_t>(Rational(w * den).convert_to<boost::multiprecision::cpp_int>()));
  return out;
}
}  // namespace

TEST_CASE("mwis oracle examples") {
  CHECK(mwis_oracle(unit_weights(named("C", {5}))).weight == 2);
  auto p4 = mwis_oracle(with_weights(named("P", {4}), {1, 5, 5, 1}));
  CHECK(p4.weight == 6);
  CHECK(is_independent(named("P", {4}), p4.set));
  auto edgeless = with_weights(Graph(4), {1, 2, 3, 4});
  CHECK(mwis_oracle(edgeless).weight == 10);
  WeightedInstance frac{named("P", {3}), {Rational(1, 3), Rational(1, 2), Rational(1, 4)}};
  CHECK(mwis_oracle(frac).weight == Rational(7, 12));
  WeightedInstance neg{named("P", {2}), {Rational(-1), Rational(1)}};
  CHECK_THROWS_AS(mwis_oracle(neg), std::invalid_argument);
  WeightedInstance short_w{named("P", {2}), {Rational(1)}};
  CHECK_THROWS_AS(mwis_oracle(short_w), std::invalid_argument);
}

TEST_CASE("mwis oracle agrees with subset enumeration") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> num(0, 20), den(1, 6);
  for (int i = 0; i < 300; ++i) {
    std::size_t n = 1 + i % 15;
    auto g = oracle::random_graph(n, 0.05 + 0.003 * i, rng);
    WeightedInstance inst{g, {}};
    for (std::size_t v = 0; v < n; ++v) inst.weights.emplace_back(num(rng), den(rng));
    auto r = mwis_oracle(inst);
    REQUIRE(is_independent(g, r.set));
    REQUIRE(r.weight * 60 == Rational(oracle::mwis(g, scaled(inst, 60))));
  }
}

TEST_CASE("huge rational weights fall back to big integers") {
  WeightedInstance inst{named("P", {3}), {}};
  Rational big = Rational(boost::multiprecision::cpp_int(1) << 80, 3);
  inst.weights = {big, big, Rational(1, 7)};
  auto r = mwis_oracle(inst);
  CHECK(r.weight == big + Rational(1, 7));
  auto d = mwis_mim_dp(inst, caterpillar_decomposition(inst.graph));
  CHECK(d.weight == r.weight);
}

TEST_CASE("mim-width dynamic program") {
  auto k33 = named("biclique", {3, 3});
  std::vector<Vertex> order{0, 1, 2, 3, 4, 5};
  auto bd = caterpillar_decomposition(k33, order);
  REQUIRE(evaluate(k33, bd).mimw == 1);
  DpStats stats;
  auto r = mwis_mim_dp(unit_weights(k33), bd, &stats);
  CHECK(r.weight == 3);
  CHECK(stats.max_classes <= 6 + 1);

  auto single = mwis_mim_dp(with_weights(Graph(1), {5}), BranchDecomposition(1, {}, {{0, 0}}));
  CHECK(single.weight == 5);
  CHECK(single.set == VertexSet{0});

  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> num(0, 12), den(1, 5);
  for (int i = 0; i < 300; ++i) {
    std::size_t n = 2 + i % 9;
    auto g = oracle::random_graph(n, 0.1 + 0.0025 * i, rng);
    WeightedInstance inst{g, {}};
    for (std::size_t v = 0; v < n; ++v) inst.weights.emplace_back(num(rng), den(rng));
    auto tree = oracle::random_decomposition(n, rng);
    DpStats st;
    auto dp = mwis_mim_dp(inst, tree, &st);
    auto exact = mwis_oracle(inst);
    REQUIRE(dp.weight == exact.weight);
    REQUIRE(is_independent(g, dp.set));
    auto w = evaluate(g, tree).mimw;
    REQUIRE(double(st.max_classes) <= std::pow(double(n), double(w)) + 1);
  }
}

TEST_CASE("list colouring oracle") {
  auto k3 = named("K", {3});
  auto forced = list_colouring_oracle(k3, {3, {{1}, {2}, {3}}});
  REQUIRE(forced);
  CHECK(*forced == std::vector<int>{1, 2, 3});
  CHECK_FALSE(list_colouring_oracle(k3, {2, {{1}, {1}, {1, 2}}}));
  CHECK_THROWS_AS(list_colouring_oracle(k3, {2, {{1}, {3}, {1}}}), std::invalid_argument);
  CHECK_THROWS_AS(list_colouring_oracle(k3, {2, {{1}, {1}}}), std::invalid_argument);
  CHECK_FALSE(list_colouring_oracle(named("C", {5}), {2, std::vector<std::vector<int>>(5, {1, 2})}));
  auto c5 = list_colouring_oracle(named("C", {5}), {3, std::vector<std::vector<int>>(5, {1, 2, 3})});
  REQUIRE(c5);

  std::mt19937_64 rng(51);
  for (int i = 0; i < 400; ++i) {
    std::size_t n = 1 + i % 8, k = 1 + i % 4;
    auto g = oracle::random_graph(n, 0.5, rng);
    ListAssignment l{k, std::vector<std::vector<int>>(n)};
    std::vector<std::uint32_t> masks(n, 0);
    for (std::size_t v = 0; v < n; ++v)
      for (int c = 1; c <= int(k); ++c)
        if (rng() % 3 != 0) {
          l.lists[v].push_back(c);
          masks[v] |= 1u << (c - 1);
        }
    auto col = list_colouring_oracle(g, l);
    REQUIRE(col.has_value() == oracle::list_colourable(g, masks));
    if (col) REQUIRE(verify_colouring(g, l, *col));
  }
}

TEST_CASE("sim-width oracle") {
  for (long long n = 2; n <= 6; ++n) CHECK(simwidth_oracle(named("K", {n})) == 1);
  CHECK(simwidth_oracle(Graph(5)) == 0);
  for (std::size_t n = 2; n <= 7; ++n)
    for (const auto& g : enumeration::all_graphs(n))
      if (n <= 6 || g.size() % 7 == 0)
        REQUIRE(simwidth_oracle(g) <= exact_width(g, WidthKind::mim).width);
}
