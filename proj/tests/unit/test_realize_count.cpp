#include <doctest.h>

#include <random>
#include <set>

#include "msk/errors.hpp"
#include "msk/realize_count.hpp"
#include "support.hpp"

using namespace msk;

namespace {

Bar bar(double b, bool bc, double d, bool dc) {
  return {0, {b, bc ? EndpointType::Closed : EndpointType::Open}, Endpoint{d, dc ? EndpointType::Closed : EndpointType::Open}};
}

Barcode levelset(std::vector<Bar> bars) { return {BarcodeFlavor::Levelset, std::move(bars)}; }

// Direct evaluation of the bound from nesting depths.
std::uint64_t oracle_bound(const Barcode& b) {
  std::uint64_t r = 1;
  std::size_t outermost = 0;
  for (std::size_t j = 0; j < b.bars.size(); ++j) {
    std::size_t depth = 0;
    for (std::size_t k = 0; k < b.bars.size(); ++k) {
      const auto& x = b.bars[j];
      const auto& y = b.bars[k];
      if (k != j && y.birth.value < x.birth.value && x.death->value < y.death->value) ++depth;
    }
    if (depth == 0) ++outermost;
    else r *= 2 * depth;
  }
  return outermost == 1 ? r : 0;
}

}  // namespace

TEST_CASE("mu counts strictly containing bars") {
  const auto b = testing::barcode("nested3.barcode.json");
  CHECK(mu(b, 0) == 0);
  CHECK(mu(b, 1) == 1);
  CHECK(mu(b, 2) == 2);
  const auto two = levelset({bar(0, true, 1, true), bar(2, true, 3, true)});
  CHECK(mu(two, 0) == 0);
  CHECK(mu(two, 1) == 0);
  CHECK_THROWS_AS(mu(b, 3), DomainError);
}

TEST_CASE("lower bound") {
  CHECK(lower_bound(testing::barcode("nested1.barcode.json")) == 1);
  CHECK(lower_bound(testing::barcode("nested2.barcode.json")) == 2);
  CHECK(lower_bound(testing::barcode("nested3.barcode.json")) == 8);
  CHECK(lower_bound(testing::barcode("fig17.barcode.json")) == 8);
  CHECK(lower_bound(testing::barcode("two_inside.barcode.json")) == 4);
}

TEST_CASE("lower bound agrees with the oracle and ignores rescaling") {
  std::mt19937_64 rng(4);
  for (int k = 0; k < 200; ++k) {
    const auto b = random_realizable_barcode(rng, 1 + k % 7);
    CHECK(lower_bound(b) == oracle_bound(b));
    Barcode s = b;
    for (auto& x : s.bars) {
      x.birth.value = 3.0 * x.birth.value * x.birth.value * x.birth.value + 7.0;
      x.death->value = 3.0 * x.death->value * x.death->value * x.death->value + 7.0;
    }
    CHECK(lower_bound(s) == lower_bound(b));
  }
}

TEST_CASE("enumeration counts") {
  CHECK(count_classes(testing::barcode("nested1.barcode.json")).count == 1);
  CHECK(count_classes(testing::barcode("nested2.barcode.json")).count == 2);
  const auto c3 = count_classes(testing::barcode("nested3.barcode.json"));
  CHECK(c3.count >= 8);
  CHECK(c3.lower_bound == 8);
  CHECK(c3.bound_respected);
  const auto two = count_classes(testing::barcode("two_inside.barcode.json"));
  CHECK(two.lower_bound == 4);
  CHECK(two.count == 4);
  CHECK(count_classes(testing::barcode("shotglass.barcode.json")).count == 2);
}

TEST_CASE("two nested bars give the side-by-side and the nested embedding") {
  const auto hs = enumerate_embeddings(testing::barcode("nested2.barcode.json"));
  REQUIRE(hs.size() == 2);
  std::set<std::string> shapes;
  for (const auto& h : hs) shapes.insert(poset_code(nesting_poset_at(h, 0.5)));
  CHECK(shapes == std::set<std::string>{"(()())", "((()))"});
}

TEST_CASE("every enumerated history round-trips and classes are distinct") {
  std::mt19937_64 rng(12);
  for (int k = 0; k < 40; ++k) {
    const auto b = random_realizable_barcode(rng, 1 + k % 4);
    for (auto mode : {EndpointMode::Insensitive, EndpointMode::Strict}) {
      const auto hs = enumerate_embeddings(b, {mode, 8});
      CHECK(hs.size() >= 1);
      std::set<std::string> codes;
      for (const auto& h : hs) {
        CHECK(barcodes_equal(levelset_barcode(h), b, mode));
        codes.insert(history_code(h));
      }
      CHECK(codes.size() == hs.size());
      for (std::size_t i = 0; i < hs.size(); ++i) {
        for (std::size_t j = i + 1; j < hs.size(); ++j) CHECK_FALSE(poset_equivalent(hs[i], hs[j]));
      }
    }
  }
}

TEST_CASE("adding a bar never lowers the count") {
  std::mt19937_64 rng(8);
  for (int k = 0; k < 30; ++k) {
    const auto b = random_realizable_barcode(rng, 2 + k % 3);
    const auto full = count_classes(b).count;
    for (std::size_t drop = 1; drop < b.bars.size(); ++drop) {
      Barcode smaller = b;
      smaller.bars.erase(smaller.bars.begin() + static_cast<long>(drop));
      if (smaller.bars[0].length() < b.bars[0].length()) continue;
      CHECK(count_classes(smaller).count <= full);
    }
  }
}

TEST_CASE("realizability") {
  const auto sub = testing::barcode("sublevel_forbidden.barcode.json");
  const auto r = is_realizable(sub);
  CHECK_FALSE(r.ok);
  CHECK(r.reason == "open bar forbidden in sublevel flavor");
  CHECK(is_realizable(testing::barcode("shotglass.barcode.json")).ok);
  const auto two_top = levelset({bar(0, true, 1, true), bar(2, true, 3, true)});
  CHECK(is_realizable(two_top).reason == "no single containing closed bar");
  CHECK_FALSE(is_realizable(levelset({bar(0, true, 3, true), bar(1, true, 2, true)})).ok);
  CHECK_FALSE(is_realizable(levelset({bar(0, true, 3, true), bar(1, true, 3.5, false)})).ok);
  CHECK_FALSE(is_realizable(levelset({bar(0, true, 3, true), bar(1, true, 3, false)})).ok);
  CHECK_THROWS_AS(enumerate_embeddings(two_top), DomainError);
  Barcode sub_ok{BarcodeFlavor::Sublevel, {{0, {1, EndpointType::Closed}, std::nullopt}, bar(2, true, 3, false)}};
  CHECK(is_realizable(sub_ok).ok);
  CHECK(is_realizable(sublevel_barcode(testing::decorated("fig3_left.graph.json"))).ok);
}

TEST_CASE("enumeration cap") {
  std::mt19937_64 rng(2);
  const auto b = random_realizable_barcode(rng, 5);
  CHECK_THROWS_AS(enumerate_embeddings(b, {EndpointMode::Insensitive, 4}), DomainError);
}

TEST_CASE("Reeb graph from a barcode") {
  const auto b = testing::barcode("fig17.barcode.json");
  const HeightGraph r = reeb_from_barcode(b);
  CHECK(r.is_tree());
  // Leaves at the closed endpoints, forks at the open ones.
  std::set<double> leaves, forks;
  for (std::size_t n = 0; n < r.nodes.size(); ++n) {
    (r.up_degree(n) + r.down_degree(n) == 1 ? leaves : forks).insert(r.nodes[n].height);
  }
  CHECK(leaves == std::set<double>{0, 1, 2, 5});
  CHECK(forks == std::set<double>{3, 4});
  const auto h = history_from_reeb(r);
  CHECK(barcodes_equal(levelset_barcode(h), b));

  const auto single = history_from_reeb(reeb_from_barcode(testing::barcode("nested1.barcode.json")));
  REQUIRE(single.events.size() == 2);
  CHECK(single.events[0].kind() == EventKind::Min);
  CHECK(single.events[1].kind() == EventKind::Max);

  const auto worm = history_from_reeb(reeb_from_barcode(testing::barcode("nested2.barcode.json")));
  CHECK(worm.events.size() == 4);
  CHECK(worm.events[2].kind() == EventKind::MergeNonNesting);
}

TEST_CASE("realization round trip on random barcodes") {
  std::mt19937_64 rng(99);
  for (int k = 0; k < 200; ++k) {
    const auto b = random_realizable_barcode(rng, 1 + k % 6);
    REQUIRE(is_realizable(b).ok);
    const HeightGraph r = reeb_from_barcode(b);
    const bool has_open_open = std::any_of(b.bars.begin(), b.bars.end(), [](const Bar& x) {
      return x.birth.type == EndpointType::Open && x.death->type == EndpointType::Open;
    });
    if (!has_open_open) CHECK(r.is_tree());
    CHECK(barcodes_equal(levelset_barcode(history_from_reeb(r)), b));
  }
}
