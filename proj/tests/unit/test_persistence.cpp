#include <doctest.h>

#include <numeric>
#include <random>

#include "msk/errors.hpp"
#include "support.hpp"

using namespace msk;

namespace {

Bar bar(int dim, double b, std::optional<double> d) {
  Bar x;
  x.dim = dim;
  x.birth = {b, EndpointType::Closed};
  if (d) x.death = Endpoint{*d, EndpointType::Open};
  return x;
}

// Betti numbers of the sublevel complex at `a`, from union-find and the Euler characteristic.
BettiNumbers oracle_betti(const DecoratedMSGraph& d, double a) {
  const MSGraph& g = d.graph;
  std::vector<std::size_t> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  long v = 0, e = 0, f = 0;
  for (std::size_t i = 0; i < g.vertex_count(); ++i) v += d.value(i) <= a;
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    const auto x = g.dart_vertex(2 * k), y = g.dart_vertex(2 * k + 1);
    if (d.value(x) <= a && d.value(y) <= a) {
      ++e;
      parent[find(x)] = find(y);
    }
  }
  const auto fs = faces(g);
  for (const auto& face : fs) {
    bool in = true;
    for (auto c : face.corners) in = in && d.value(c) <= a;
    f += in;
  }
  BettiNumbers b;
  for (std::size_t i = 0; i < g.vertex_count(); ++i) b.b0 += d.value(i) <= a && find(i) == i;
  b.b2 = f == static_cast<long>(fs.size()) ? 1 : 0;
  b.b1 = static_cast<int>(b.b0 + b.b2 - (v - e + f));
  return b;
}

BettiNumbers betti_from_barcode(const Barcode& bc, double a) {
  BettiNumbers b;
  for (const auto& x : bc.bars) {
    const bool alive = x.birth.value <= a && (!x.death || a < x.death->value);
    if (!alive) continue;
    (x.dim == 0 ? b.b0 : x.dim == 1 ? b.b1 : b.b2)++;
  }
  return b;
}

}  // namespace

TEST_CASE("boundary reduction of a filled triangle") {
  // 0,1,2 vertices; 3=01, 4=12, 5=02 edges; 6 triangle.
  const Pairing p = reduce_boundary({{}, {}, {}, {0, 1}, {1, 2}, {0, 2}, {3, 4, 5}});
  CHECK(p.unpaired == std::vector<std::size_t>{0});
  const std::vector<std::pair<std::size_t, std::size_t>> expected{{1, 3}, {2, 4}, {5, 6}};
  auto got = p.pairs;
  std::sort(got.begin(), got.end());
  CHECK(got == expected);
}

TEST_CASE("figure 3 barcodes") {
  for (const char* name : {"fig3_left.graph.json", "fig3_right.graph.json"}) {
    const Barcode b = sublevel_barcode(testing::decorated(name));
    Barcode want{BarcodeFlavor::Sublevel,
                 {bar(0, 1, {}), bar(0, 2, 3), bar(1, 4, 6), bar(1, 5, 7), bar(2, 8, {})}};
    want.normalize();
    CHECK(barcodes_equal(b, want, EndpointMode::Strict));
    CHECK(to_string(b) == "H0: [1,inf) [2,3)\nH1: [4,6) [5,7)\nH2: [8,inf)\n");
  }
}

TEST_CASE("figure 3 merge trees, Reeb graphs and equivalences") {
  const auto a = testing::decorated("fig3_left.graph.json");
  const auto b = testing::decorated("fig3_right.graph.json");
  CHECK(height_isomorphic(merge_tree(a), merge_tree(b)));
  const HeightGraph ra = reeb_graph(a), rb = reeb_graph(b);
  CHECK(height_isomorphic(ra, rb));
  CHECK(ra.is_tree());
  CHECK_FALSE(graph_equivalent(a, b));
  CHECK(graph_equivalent(a, a));
  CHECK(homologically_equivalent(a, b));

  std::vector<double> shifted = a.values;
  for (auto& v : shifted) v += 0.5;
  const auto c = decorate(a.graph, shifted);
  CHECK_FALSE(graph_equivalent(a, c, ValueMatch::Exact));
  CHECK(graph_equivalent(a, c, ValueMatch::Rank));
}

TEST_CASE("level-set barcode of the figure 3 Reeb graph") {
  const Barcode b = levelset_barcode(reeb_graph(testing::decorated("fig3_left.graph.json")));
  CHECK(to_string(b) == "H0: [1,8] [2,3) (4,6] (5,7]\n");
}

TEST_CASE("decoration checks") {
  const MSGraph g = testing::graph("fig3_left.graph.json");
  std::vector<double> v(g.vertex_count(), 1.0);
  CHECK_THROWS_AS(decorate(g, v), DomainError);
  CHECK_THROWS_AS(decorate(g, {1.0}), DomainError);
  auto d = testing::decorated("fig3_left.graph.json");
  std::vector<double> bad = d.values;
  bad[0] = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(decorate(g, bad), DomainError);
}

TEST_CASE("sublevel barcodes match the Betti oracle on the census") {
  std::mt19937_64 rng(17);
  for (const auto& g : census(MSGraph::base_sphere(), 8)) {
    if (g.is_base_sphere()) continue;
    for (int rep = 0; rep < 3; ++rep) {
      const auto d = testing::random_decoration(g, rng);
      const Barcode bc = sublevel_barcode(d);
      // Every critical point is paired exactly once.
      std::size_t h0 = 0, h1 = 0, h2 = 0;
      for (const auto& x : bc.bars) (x.dim == 0 ? h0 : x.dim == 1 ? h1 : h2)++;
      CHECK(h0 == g.count(MorseIndex::Minimum));
      CHECK(h2 == 1);
      CHECK(h0 - 1 + h1 == g.count(MorseIndex::Saddle));
      const auto slicing = canonical_slicing(d);
      const auto profile = betti_profile(d, slicing);
      for (std::size_t i = 0; i < slicing.size(); ++i) {
        const auto want = oracle_betti(d, slicing[i]);
        CHECK(betti_from_barcode(bc, slicing[i]) == want);
        CHECK(profile[i] == want);
      }
      const HeightGraph r = reeb_graph(d);
      CHECK(r.is_tree());
      CHECK(r.nodes.size() == g.vertex_count());
      std::size_t leaves = 0;
      for (std::size_t n = 0; n < r.nodes.size(); ++n) leaves += r.up_degree(n) + r.down_degree(n) == 1;
      CHECK(leaves == g.count(MorseIndex::Minimum) + g.count(MorseIndex::Maximum));
      const HeightGraph mt = merge_tree(d);
      std::size_t mt_leaves = 0;
      for (std::size_t n = 0; n < mt.nodes.size(); ++n) mt_leaves += mt.down_degree(n) == 0;
      CHECK(mt_leaves == g.count(MorseIndex::Minimum));
    }
  }
}

TEST_CASE("graph equivalence implies equal sublevel barcodes") {
  std::mt19937_64 rng(23);
  for (const auto& g : census(MSGraph::base_sphere(), 6)) {
    if (g.is_base_sphere()) continue;
    const auto d = testing::random_decoration(g, rng);
    const auto e = decorate(from_encoding(to_encoding(g)), d.values);
    REQUIRE(graph_equivalent(d, e));
    CHECK(barcodes_equal(sublevel_barcode(d), sublevel_barcode(e), EndpointMode::Strict));
  }
}

TEST_CASE("slicing checks") {
  const auto d = testing::decorated("fig3_left.graph.json");
  const auto good = canonical_slicing(d);
  CHECK(is_slicing(critical_values(d), good));
  auto bad = good;
  bad[1] = bad[0];
  CHECK_THROWS_AS(betti_profile(d, bad), DomainError);
  CHECK_THROWS_AS(betti_profile(d, {0.0, 1.0}), DomainError);
}

TEST_CASE("barcode comparison modes") {
  Barcode a{BarcodeFlavor::Levelset, {bar(0, 1, 2)}};
  Barcode b = a;
  b.bars[0].death->type = EndpointType::Closed;
  CHECK(barcodes_equal(a, b));
  CHECK_FALSE(barcodes_equal(a, b, EndpointMode::Strict));
  b.bars[0].death->value = 3;
  CHECK_FALSE(barcodes_equal(a, b));
}
