#include <doctest.h>

#include <random>

#include "msk/errors.hpp"
#include "support.hpp"

using namespace msk;

namespace {

std::size_t critical_points(const MSGraph& g) { return g.vertex_count(); }

}  // namespace

TEST_CASE("base sphere admits exactly the two face moves") {
  const auto moves = enumerate_moves(MSGraph::base_sphere());
  REQUIRE(moves.size() == 2);
  CHECK(moves[0].kind == MoveKind::FaceMax);
  CHECK(moves[1].kind == MoveKind::FaceMin);
  for (const auto& m : moves) {
    const MSGraph g = apply_move(MSGraph::base_sphere(), m);
    CHECK(validate(g).ok());
    CHECK(g.vertex_count() == 4);
    CHECK(g.count(MorseIndex::Saddle) == 1);
  }
}

TEST_CASE("census sizes agree with a brute-force deduplication") {
  // Closure under additions, deduplicated with the dart-propagation oracle
  // instead of canonical codes.
  std::vector<MSGraph> classes{MSGraph::base_sphere()};
  std::vector<MSGraph> frontier = classes;
  const std::size_t n_max = 8;
  while (!frontier.empty()) {
    std::vector<MSGraph> next;
    for (const auto& g : frontier) {
      for (const auto& m : enumerate_additions(g)) {
        MSGraph h = apply_move(g, m);
        if (critical_points(h) > n_max) continue;
        const bool known = std::any_of(classes.begin(), classes.end(), [&](const MSGraph& c) { return testing::brute_isomorphic(c, h); });
        if (!known) {
          classes.push_back(h);
          next.push_back(h);
        }
      }
    }
    frontier = std::move(next);
  }
  CHECK(census(MSGraph::base_sphere(), n_max).size() == classes.size());
  CHECK(reachable_codes(MSGraph::base_sphere(), n_max).size() == classes.size());
  // Frozen from the oracle above.
  CHECK(census(MSGraph::base_sphere(), 4).size() == 3);
  CHECK(census(MSGraph::base_sphere(), 6).size() == 7);
  CHECK(classes.size() == 21);
}

TEST_CASE("every move keeps the graph valid and additions are undone by a cancellation") {
  for (const auto& g : census(MSGraph::base_sphere(), 8)) {
    const auto code = canonical_code(g);
    for (const auto& m : enumerate_moves(g)) {
      const MSGraph h = apply_move(g, m);
      REQUIRE_MESSAGE(validate(h).ok(), describe(m));
      CHECK(euler_characteristic(h) == 2);
      if (is_cancellation(m.kind)) {
        CHECK(h.vertex_count() + 2 == g.vertex_count());
        continue;
      }
      CHECK(h.vertex_count() == g.vertex_count() + 2);
      CHECK(h.count(MorseIndex::Saddle) == g.count(MorseIndex::Saddle) + 1);
      CHECK(h.count(extremum_of(m.kind)) == g.count(extremum_of(m.kind)) + 1);
      bool restored = false;
      for (const auto& back : enumerate_moves(h)) {
        if (is_cancellation(back.kind) && canonical_code(apply_move(h, back)) == code) {
          restored = true;
          break;
        }
      }
      CHECK_MESSAGE(restored, describe(m));
    }
  }
}

TEST_CASE("vertex moves never use equal gaps") {
  for (const auto& g : census(MSGraph::base_sphere(), 8)) {
    for (const auto& m : enumerate_moves(g)) {
      if (const auto* s = std::get_if<VertexSite>(&m.site)) CHECK(s->gap_a != s->gap_b);
    }
  }
}

TEST_CASE("moves are pure") {
  const MSGraph g = testing::graph("fig2.graph.json");
  const MSGraph copy = g;
  for (const auto& m : enumerate_moves(g)) (void)apply_move(g, m);
  CHECK(g == copy);
}

TEST_CASE("moves at the wrong site are rejected") {
  const MSGraph g = testing::graph("fig2.graph.json");
  CHECK_THROWS_AS(apply_move(g, {MoveKind::FaceMax, FaceSite{99}}), DomainError);
  CHECK_THROWS_AS(apply_move(g, {MoveKind::EdgeMax, EdgeSite{"nope"}}), DomainError);
  CHECK_THROWS_AS(apply_move(g, {MoveKind::CancelFaceMax, CancelSite{"m1", "a"}}), DomainError);
  CHECK_THROWS_AS(apply_move(g, {MoveKind::FaceMax, EdgeSite{"e0"}}), DomainError);
  try {
    (void)apply_move(g, {MoveKind::FaceMax, FaceSite{99}});
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("FaceMax not applicable") == 0);
  }
}

TEST_CASE("min moves are the duals of max moves") {
  for (const auto& g : census(MSGraph::base_sphere(), 6)) {
    std::size_t max_moves = 0, min_moves = 0;
    for (const auto& m : enumerate_additions(g)) (extremum_of(m.kind) == MorseIndex::Maximum ? max_moves : min_moves)++;
    // Swapping the roles of minima and maxima maps one family onto the other.
    std::size_t dual_max = 0;
    const auto enc = to_encoding(g);
    GraphEncoding flipped = enc;
    for (auto& v : flipped.vertices) v.index = 2 - v.index;
    for (auto& e : flipped.edges) e.kind.reset();
    for (const auto& m : enumerate_additions(from_encoding(flipped))) dual_max += extremum_of(m.kind) == MorseIndex::Maximum;
    CHECK(dual_max == min_moves);
    (void)max_moves;
  }
}

TEST_CASE("figure 3 graphs are connected by moves") {
  const MSGraph a = testing::graph("fig3_left.graph.json");
  const MSGraph b = testing::graph("fig3_right.graph.json");
  const auto seq = connect(a, b, 12, 10);
  REQUIRE(seq.has_value());
  CHECK(seq->size() <= 12);
  MSGraph cur = a;
  for (const auto& m : *seq) cur = apply_move(cur, m);
  CHECK(is_isomorphic(cur, b));
  CHECK(testing::brute_isomorphic(cur, b));
}

TEST_CASE("connect on random census pairs") {
  const auto graphs = census(MSGraph::base_sphere(), 6);
  std::mt19937_64 rng(3);
  for (int k = 0; k < 15; ++k) {
    const auto& a = graphs[rng() % graphs.size()];
    const auto& b = graphs[rng() % graphs.size()];
    const auto seq = connect(a, b, 8, 6);
    REQUIRE(seq.has_value());
    MSGraph cur = a;
    for (const auto& m : *seq) cur = apply_move(cur, m);
    CHECK(is_isomorphic(cur, b));
  }
  CHECK(connect(graphs[0], graphs[0], 0)->empty());
}
