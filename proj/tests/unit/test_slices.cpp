#include <doctest.h>

#include <functional>
#include <random>

#include "msk/errors.hpp"
#include "support.hpp"

using namespace msk;

namespace {

// Independent forest simulation: circle -> parent ("" for the outside).
using Raw = std::map<std::string, std::string>;

Raw simulate(const EmbeddingHistory& h, double value) {
  Raw f;
  auto kids = [&](const std::string& p) {
    std::vector<std::string> out;
    for (const auto& [c, q] : f) {
      if (q == p) out.push_back(c);
    }
    return out;
  };
  auto outer = [](const std::string& s) { return s == kOuter ? std::string() : s; };
  for (const auto& e : h.events) {
    if (e.time >= value) break;
    if (const auto* x = std::get_if<MinEvent>(&e.data)) f[x->created] = outer(x->region);
    if (const auto* x = std::get_if<MaxEvent>(&e.data)) f.erase(x->circle);
    if (const auto* x = std::get_if<MergeNonNestingEvent>(&e.data)) {
      const auto p = f[x->a];
      for (const auto& c : kids(x->a)) f[c] = x->created;
      for (const auto& c : kids(x->b)) f[c] = x->created;
      f.erase(x->a);
      f.erase(x->b);
      f[x->created] = p;
    }
    if (const auto* x = std::get_if<MergeNestingEvent>(&e.data)) {
      const auto p = f[x->outer];
      for (const auto& c : kids(x->outer)) f[c] = x->created;
      for (const auto& c : kids(x->inner)) f[c] = p;
      f.erase(x->outer);
      f.erase(x->inner);
      f[x->created] = p;
    }
    if (const auto* x = std::get_if<SplitNonNestingEvent>(&e.data)) {
      const auto p = f[x->circle];
      for (const auto& c : kids(x->circle)) {
        f[c] = std::find(x->first_children.begin(), x->first_children.end(), c) != x->first_children.end() ? x->first : x->second;
      }
      f.erase(x->circle);
      f[x->first] = p;
      f[x->second] = p;
    }
    if (const auto* x = std::get_if<SplitNestingEvent>(&e.data)) {
      const auto p = f[x->circle];
      for (const auto& c : kids(x->circle)) f[c] = x->outer;
      for (const auto& c : x->inside) f[c] = x->inner;
      f.erase(x->circle);
      f[x->outer] = p;
      f[x->inner] = x->outer;
    }
  }
  return f;
}

std::string tree_code(const Raw& f, const std::string& root = "") {
  std::vector<std::string> parts;
  for (const auto& [c, p] : f) {
    if (p == root) parts.push_back(tree_code(f, c));
  }
  std::sort(parts.begin(), parts.end());
  std::string s = "(";
  for (const auto& x : parts) s += x;
  return s + ")";
}

struct ArrowShape {
  ArrowDirection dir;
  bool injective, surjective, iso;
};

// Expected (left arrow, right arrow) for each event kind.
std::pair<ArrowShape, ArrowShape> table(EventKind k) {
  using D = ArrowDirection;
  switch (k) {
    case EventKind::Min: return {{D::Backward, true, true, true}, {D::Forward, true, false, false}};
    case EventKind::Max: return {{D::Backward, true, false, false}, {D::Forward, true, true, true}};
    case EventKind::MergeNonNesting: return {{D::Backward, true, true, true}, {D::Forward, false, true, false}};
    case EventKind::SplitNonNesting: return {{D::Backward, false, true, false}, {D::Forward, true, true, true}};
    case EventKind::MergeNesting: return {{D::Backward, true, true, true}, {D::Backward, true, false, false}};
    case EventKind::SplitNesting: return {{D::Forward, true, false, false}, {D::Forward, true, true, true}};
  }
  return {};
}

bool matches(const ZigzagArrow& a, const ArrowShape& s) {
  return a.direction == s.dir && a.injective == s.injective && a.surjective == s.surjective && a.isomorphism == s.iso &&
         a.order_preserving;
}

}  // namespace

TEST_CASE("worm and shotglass") {
  const auto worm = testing::history("worm.history.json");
  const auto shot = testing::history("shotglass.history.json");
  const Barcode bw = levelset_barcode(worm), bs = levelset_barcode(shot);
  CHECK(to_string(bw) == "H0: [1,4] [2,3)\n");
  CHECK(to_string(bs) == "H0: [1,4] (2,3)\n");
  CHECK(barcodes_equal(bw, bs));
  CHECK_FALSE(barcodes_equal(bw, bs, EndpointMode::Strict));
  const auto pw = nesting_poset_at(worm, 2.5), ps = nesting_poset_at(shot, 2.5);
  CHECK(poset_code(pw) == "(()())");  // two circles side by side
  CHECK(poset_code(ps) == "((()))");  // a 3-chain
  CHECK_FALSE(poset_isomorphic(pw, ps));
  CHECK_FALSE(poset_equivalent(worm, shot));
  CHECK(poset_equivalent(worm, worm));
}

TEST_CASE("same barcode, different nesting") {
  const auto a = testing::history("worm_asym.history.json");
  const auto b = testing::history("worm_asym_swapped.history.json");
  CHECK(barcodes_equal(levelset_barcode(a), levelset_barcode(b), EndpointMode::Strict));
  CHECK_FALSE(poset_equivalent(a, b));
}

TEST_CASE("event preconditions") {
  NestingForest f;
  f = apply_event(f, {1, MinEvent{kOuter, "A"}});
  f = apply_event(f, {2, MinEvent{"A", "B"}});
  CHECK(f.parent("B") == "A");
  CHECK(f.encloses("A", "B"));
  CHECK_THROWS_AS(apply_event(f, {3, MaxEvent{"A"}}), DomainError);
  CHECK_THROWS_AS(apply_event(f, {3, MergeNonNestingEvent{"A", "B", "C"}}), DomainError);
  CHECK_THROWS_AS(apply_event(f, {3, MergeNestingEvent{"B", "A", "C"}}), DomainError);
  CHECK_THROWS_AS(apply_event(f, {3, MinEvent{"Z", "C"}}), DomainError);
  CHECK_THROWS_AS(apply_event(f, {3, MinEvent{kOuter, "A"}}), DomainError);
  CHECK_THROWS_AS(apply_event(f, {3, SplitNestingEvent{"A", {"B"}, "P", "Q"}}), DomainError);
  const auto g = apply_event(f, {3, MergeNestingEvent{"A", "B", "C"}});
  CHECK(g.circles() == std::vector<CircleId>{"C"});

  EmbeddingHistory unsorted{{{2, MinEvent{kOuter, "A"}}, {1, MaxEvent{"A"}}}};
  CHECK_THROWS_AS(check_history(unsorted), DomainError);
  EmbeddingHistory open_end{{{1, MinEvent{kOuter, "A"}}}};
  CHECK_THROWS_AS(check_history(open_end), DomainError);
}

TEST_CASE("split and merge are inverse") {
  NestingForest f;
  f = apply_event(f, {1, MinEvent{kOuter, "A"}});
  f = apply_event(f, {2, MinEvent{"A", "B"}});
  f = apply_event(f, {3, MinEvent{kOuter, "S"}});
  const auto split = apply_event(f, {4, SplitNestingEvent{"A", {"S"}, "O", "I"}});
  CHECK(split.parent("I") == "O");
  CHECK(split.parent("S") == "I");
  CHECK(split.parent("B") == "O");
  const auto merged = apply_event(split, {5, MergeNestingEvent{"O", "I", "A"}});
  CHECK(merged == f);
  const auto two = apply_event(f, {4, SplitNonNestingEvent{"A", {"B"}, "P", "Q"}});
  CHECK(two.parent("B") == "P");
  CHECK(apply_event(two, {5, MergeNonNestingEvent{"P", "Q", "A"}}) == f);
}

TEST_CASE("zigzag arrows follow the six-case table on random histories") {
  std::mt19937_64 rng(101);
  std::map<EventKind, int> seen;
  for (int k = 0; k < 300; ++k) {
    const auto h = random_history(rng, 12);
    const Zigzag z = zigzag(h);
    REQUIRE(z.nodes.size() == 2 * h.events.size() + 1);
    REQUIRE(z.arrows.size() == 2 * h.events.size());
    for (std::size_t i = 0; i < h.events.size(); ++i) {
      const auto [l, r] = table(h.events[i].kind());
      CHECK(matches(z.arrows[2 * i], l));
      CHECK(matches(z.arrows[2 * i + 1], r));
      ++seen[h.events[i].kind()];
    }
  }
  CHECK(seen.size() == 6);
}

TEST_CASE("posets agree with an independent simulation and are constant between events") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.05, 0.95);
  for (int k = 0; k < 200; ++k) {
    const auto h = random_history(rng, 10);
    const auto t = h.times();
    for (std::size_t i = 0; i + 1 < t.size(); ++i) {
      const double x = t[i] + u(rng) * (t[i + 1] - t[i]);
      const double y = t[i] + u(rng) * (t[i + 1] - t[i]);
      const auto px = nesting_poset_at(h, x), py = nesting_poset_at(h, y);
      CHECK(poset_isomorphic(px, py));
      CHECK(poset_code(px) == tree_code(simulate(h, x)));
    }
  }
}

TEST_CASE("canonical code ignores circle names and twin order") {
  const EmbeddingHistory a{{{1, MinEvent{kOuter, "A"}},
                            {2, MinEvent{"A", "K"}},
                            {3, SplitNonNestingEvent{"A", {"K"}, "P", "Q"}},
                            {4, MaxEvent{"K"}},
                            {5, MergeNonNestingEvent{"P", "Q", "R"}},
                            {6, MaxEvent{"R"}}}};
  const EmbeddingHistory b{{{1, MinEvent{kOuter, "x"}},
                            {2, MinEvent{"x", "y"}},
                            {3, SplitNonNestingEvent{"x", {}, "u", "v"}},
                            {4, MaxEvent{"y"}},
                            {5, MergeNonNestingEvent{"v", "u", "w"}},
                            {6, MaxEvent{"w"}}}};
  CHECK(history_code(a) == history_code(b));
  CHECK(poset_equivalent(a, b));
  EmbeddingHistory c = a;
  c.events[1] = {2, MinEvent{kOuter, "K"}};
  std::get<SplitNonNestingEvent>(c.events[2].data).first_children.clear();
  CHECK_FALSE(poset_equivalent(a, c));
}

TEST_CASE("poset equivalence implies equal strict barcodes and posets") {
  std::mt19937_64 rng(9);
  std::vector<EmbeddingHistory> hs;
  for (int k = 0; k < 300; ++k) hs.push_back(random_history(rng, 8));
  for (const auto& h : hs) {
    // A renamed copy is always equivalent.
    EmbeddingHistory r = h;
    auto rn = [](CircleId& c) {
      if (c != kOuter) c = "r_" + c;
    };
    for (auto& e : r.events) {
      std::visit(
          [&](auto& ev) {
            using T = std::decay_t<decltype(ev)>;
            if constexpr (std::is_same_v<T, MinEvent>) { rn(ev.region); rn(ev.created); }
            else if constexpr (std::is_same_v<T, MaxEvent>) rn(ev.circle);
            else if constexpr (std::is_same_v<T, MergeNonNestingEvent>) { rn(ev.a); rn(ev.b); rn(ev.created); }
            else if constexpr (std::is_same_v<T, MergeNestingEvent>) { rn(ev.outer); rn(ev.inner); rn(ev.created); }
            else if constexpr (std::is_same_v<T, SplitNonNestingEvent>) {
              rn(ev.circle); rn(ev.first); rn(ev.second);
              for (auto& c : ev.first_children) rn(c);
            } else { rn(ev.circle); rn(ev.outer); rn(ev.inner); for (auto& c : ev.inside) rn(c); }
          },
          e.data);
    }
    REQUIRE(poset_equivalent(h, r));
  }
  for (std::size_t i = 0; i < hs.size(); ++i) {
    for (std::size_t j = i + 1; j < hs.size(); ++j) {
      if (!poset_equivalent(hs[i], hs[j])) continue;
      CHECK(barcodes_equal(levelset_barcode(hs[i]), levelset_barcode(hs[j]), EndpointMode::Strict));
      for (double v : default_slicing(hs[i])) CHECK(poset_isomorphic(nesting_poset_at(hs[i], v), nesting_poset_at(hs[j], v)));
    }
  }
}

TEST_CASE("slicing and Galois reversal") {
  const auto worm = testing::history("worm.history.json");
  CHECK_THROWS_AS(zigzag(worm, {0, 1, 2, 3, 4}), DomainError);
  const Zigzag z = zigzag(worm, {0.5, 1.5, 2.5, 3.5, 4.5});
  // Isomorphisms reverse to their inverse.
  for (std::size_t k = 0; k < z.arrows.size(); ++k) {
    if (!z.arrows[k].isomorphism) continue;
    for (const auto& [y, x] : galois_reverse(z, k)) {
      REQUIRE(x.has_value());
      CHECK(*x == y);
    }
  }
  // The merge arrow a,b -> m has no unique preimage maximum for m.
  const auto rev = galois_reverse(z, 5);
  const auto it = std::find_if(rev.begin(), rev.end(), [](const auto& p) { return p.first == "C"; });
  REQUIRE(it != rev.end());
  CHECK_FALSE(it->second.has_value());
}

TEST_CASE("combinatorial barcode on the fixtures") {
  const auto worm = combinatorial_barcode(testing::history("worm.history.json"));
  CHECK(worm.decomposable);
  CHECK(barcodes_equal(worm.barcode, levelset_barcode(testing::history("worm.history.json"))));
  const auto shot = combinatorial_barcode(testing::history("shotglass.history.json"));
  CHECK(shot.barcode.bars.size() == 2);
}

TEST_CASE("random histories are valid and bounded") {
  std::mt19937_64 rng(1);
  for (int k = 0; k < 500; ++k) {
    const auto h = random_history(rng, 12);
    CHECK_NOTHROW(check_history(h));
    CHECK(h.events.size() <= 12);
    // Circle count changes by exactly one at every event.
    for (std::size_t i = 0; i < h.events.size(); ++i) {
      const long before = static_cast<long>(forest_after(h, i).size());
      const long after = static_cast<long>(forest_after(h, i + 1).size());
      CHECK(std::abs(after - before) == 1);
    }
  }
}

TEST_CASE("history Reeb graph") {
  const auto r = reeb_graph(testing::history("worm.history.json"));
  CHECK(r.nodes.size() == 4);
  CHECK(r.arcs.size() == 3);
  CHECK(r.is_tree());
  CHECK_FALSE(reeb_graph(testing::history("shotglass.history.json")).is_tree());
}
