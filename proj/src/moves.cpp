#include "msk/moves.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <unordered_map>

#include "msk/errors.hpp"

namespace msk {

namespace {

constexpr std::array<std::string_view, 12> kNames = {
    "FaceMax",       "FaceMin",       "EdgeMax",         "EdgeMin",        "VertexMax",
    "VertexMin",     "CancelFaceMax", "CancelFaceMin",   "CancelEdgeMax",  "CancelEdgeMin",
    "CancelVertexMax", "CancelVertexMin"};

MoveKind with_extremum(MoveKind max_kind, MorseIndex ext) {
  return static_cast<MoveKind>(static_cast<int>(max_kind) + (ext == MorseIndex::Minimum ? 1 : 0));
}

[[noreturn]] void reject(const MoveInstance& m, const std::string& why) {
  throw DomainError(std::string(to_string(m.kind)) + " not applicable: " + why);
}

std::size_t vertex_by_id(const MSGraph& g, const MoveInstance& m, const std::string& id) {
  auto v = g.find_vertex(id);
  if (!v) reject(m, "unknown vertex '" + id + "'");
  return *v;
}

// -- additions -------------------------------------------------------------

MSGraph face_move(const MSGraph& g, const MoveInstance& m, MorseIndex ext) {
  const auto& site = std::get<FaceSite>(m.site);
  auto fs = faces(g);
  if (site.face >= fs.size()) reject(m, "face index out of range");
  const Face& f = fs[site.face];
  const MorseIndex opp = dual(ext);

  // `a`: the face's corner of the new extremum's type; `d`: the opposite one.
  std::size_t a = kNoDart, d = kNoDart, pa = kNoDart, pd = kNoDart;
  int na = 0, nd = 0;
  for (std::size_t k = 0; k < f.corners.size(); ++k) {
    std::size_t v = f.corners[k];
    std::size_t gap = f.degenerate ? kNoDart : MSGraph::twin(f.darts[(k + f.darts.size() - 1) % f.darts.size()]);
    if (g.index(v) == ext) {
      a = v;
      pa = gap;
      ++na;
    } else if (g.index(v) == opp) {
      d = v;
      pd = gap;
      ++nd;
    }
  }
  if (na != 1 || nd != 1) reject(m, "face must have exactly one min corner and one max corner");

  MapEditor ed(g);
  std::size_t e = ed.add_vertex(MorseIndex::Saddle);
  std::size_t x = ed.add_vertex(ext);
  auto [na_dart, ea] = ed.insert_edge(a, pa, e, kNoDart);
  (void)na_dart;
  auto [ne1, nd1] = ed.insert_edge(e, ea, d, pd);
  (void)ne1;
  auto [ne2, nd2] = ed.insert_edge(e, ea, d, nd1);
  (void)nd2;
  ed.insert_edge(e, ne2, x, kNoDart);
  return ed.finish();
}

// Joins saddle t to the unique `opp` corner in each of the two faces at its
// degree-2 gaps.  t's rotation must be [t0, t1].
void fan_out(MapEditor& ed, std::size_t t, MorseIndex opp) {
  std::size_t t0 = ed.rotation(t)[0];
  std::size_t t1 = ed.rotation(t)[1];
  std::size_t g1 = ed.unique_corner_gap(t1, opp);
  ed.insert_edge(t, t0, ed.dart_vertex(g1), g1);
  std::size_t g2 = ed.unique_corner_gap(t0, opp);
  ed.insert_edge(t, t1, ed.dart_vertex(g2), g2);
}

MSGraph edge_move(const MSGraph& g, const MoveInstance& m, MorseIndex ext) {
  const auto& site = std::get<EdgeSite>(m.site);
  auto e = g.find_edge(site.edge);
  if (!e) reject(m, "unknown edge '" + site.edge + "'");
  if (g.edge_kind(*e) != edge_kind_to(ext)) {
    reject(m, "edge '" + site.edge + "' is not a " + std::string(to_string(edge_kind_to(ext))) + " edge");
  }
  std::size_t ds = 2 * *e;
  if (g.index(g.dart_vertex(ds)) != MorseIndex::Saddle) ds = MSGraph::twin(ds);
  if (g.index(g.dart_vertex(ds)) != MorseIndex::Saddle) reject(m, "edge has no saddle end");

  MapEditor ed(g);
  std::size_t x = ed.add_vertex(ext);
  std::size_t t = ed.add_vertex(MorseIndex::Saddle);
  ed.subdivide(ds, x);
  std::size_t x_far = ed.rotation(x)[1];
  ed.subdivide(x_far, t);
  fan_out(ed, t, dual(ext));
  return ed.finish();
}

MSGraph vertex_move(const MSGraph& g, const MoveInstance& m, MorseIndex ext) {
  const auto& site = std::get<VertexSite>(m.site);
  std::size_t v = vertex_by_id(g, m, site.vertex);
  if (g.index(v) != ext) reject(m, "vertex '" + site.vertex + "' is not a " + std::string(to_string(ext)));
  const auto rot = g.rotation(v);
  const std::size_t k = rot.size();
  std::size_t i = std::min(site.gap_a, site.gap_b), j = std::max(site.gap_a, site.gap_b);
  if (k < 2) reject(m, "vertex needs degree at least 2");
  if (i == j || j >= k) reject(m, "gaps must be two distinct positions below the degree");

  MapEditor ed(g);
  std::size_t v2 = ed.add_vertex(ext);
  std::vector<std::size_t> part_b;
  for (std::size_t q = (j + 1) % k;; q = (q + 1) % k) {
    part_b.push_back(rot[q]);
    if (q == i) break;
  }
  ed.move_darts(part_b, v2);
  auto [a, b] = ed.insert_edge(v, rot[j], v2, rot[i]);
  (void)b;
  std::size_t s = ed.add_vertex(MorseIndex::Saddle);
  ed.subdivide(a, s);
  fan_out(ed, s, dual(ext));
  return ed.finish();
}

// -- cancellation ----------------------------------------------------------

struct CancelPlan {
  std::size_t s, x, y;     // saddle, removed extremum, surviving extremum
  std::size_t sx, sy;      // saddle darts towards x and y
  MoveKind kind;
};

// Checks the local pattern and classifies it by the degree of the removed extremum.
CancelPlan plan_cancel(const MSGraph& g, const MoveInstance& m) {
  const auto& site = std::get<CancelSite>(m.site);
  const MorseIndex ext = extremum_of(m.kind);
  std::size_t s = vertex_by_id(g, m, site.saddle);
  std::size_t x = vertex_by_id(g, m, site.extremum);
  if (g.index(s) != MorseIndex::Saddle) reject(m, "'" + site.saddle + "' is not a saddle");
  if (g.index(x) != ext) reject(m, "'" + site.extremum + "' is not a " + std::string(to_string(ext)));
  std::vector<std::size_t> same;
  for (auto d : g.rotation(s)) {
    if (g.index(g.other_end(d)) == ext) same.push_back(d);
  }
  if (same.size() != 2) reject(m, "saddle must have two " + std::string(to_string(ext)) + " neighbours");
  std::size_t o0 = g.other_end(same[0]), o1 = g.other_end(same[1]);
  if (o0 == o1) reject(m, "both " + std::string(to_string(ext)) + " neighbours of the saddle coincide");
  if (o0 != x && o1 != x) reject(m, "'" + site.extremum + "' is not adjacent to the saddle");
  CancelPlan p{};
  p.s = s;
  p.x = x;
  p.sx = o0 == x ? same[0] : same[1];
  p.sy = o0 == x ? same[1] : same[0];
  p.y = g.other_end(p.sy);
  const std::size_t deg = g.degree(x);
  const MoveKind base = deg == 1 ? MoveKind::CancelFaceMax : deg == 2 ? MoveKind::CancelEdgeMax : MoveKind::CancelVertexMax;
  p.kind = with_extremum(base, ext);
  return p;
}

MSGraph cancel(const MSGraph& g, const MoveInstance& m) {
  CancelPlan p = plan_cancel(g, m);
  if (p.kind != m.kind) {
    reject(m, "removed extremum has degree " + std::to_string(g.degree(p.x)) + ", which matches " +
                  std::string(to_string(p.kind)));
  }
  MapEditor ed(g);
  for (auto d : g.rotation(p.s)) {
    if (d != p.sx && d != p.sy) ed.remove_edge(d);
  }
  // Contract y - s - x into y: x's other darts take the place of y's dart towards s.
  std::size_t xs = MSGraph::twin(p.sx);
  std::size_t ys = MSGraph::twin(p.sy);
  std::vector<std::size_t> moved;
  for (std::size_t d = ed.next_around(xs); d != xs; d = ed.next_around(d)) moved.push_back(d);
  ed.splice(ys, moved);
  ed.remove_edge(ys);
  ed.remove_edge(xs);
  ed.remove_vertex(p.x);
  ed.remove_vertex(p.s);
  MSGraph out = ed.finish();
  auto rep = validate(out);
  if (!rep.ok()) reject(m, "result would violate: " + std::string(to_string(rep.violations.front().kind)));
  return out;
}

}  // namespace

std::string_view to_string(MoveKind kind) { return kNames[static_cast<std::size_t>(kind)]; }

std::optional<MoveKind> parse_move_kind(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == name) return static_cast<MoveKind>(i);
  }
  return std::nullopt;
}

bool is_cancellation(MoveKind kind) { return static_cast<int>(kind) >= static_cast<int>(MoveKind::CancelFaceMax); }

MorseIndex extremum_of(MoveKind kind) {
  return static_cast<int>(kind) % 2 == 0 ? MorseIndex::Maximum : MorseIndex::Minimum;
}

std::string describe(const MoveInstance& m) {
  std::string s(to_string(m.kind));
  std::visit(
      [&](const auto& site) {
        using T = std::decay_t<decltype(site)>;
        if constexpr (std::is_same_v<T, FaceSite>) {
          s += " face=" + std::to_string(site.face);
        } else if constexpr (std::is_same_v<T, EdgeSite>) {
          s += " edge=" + site.edge;
        } else if constexpr (std::is_same_v<T, VertexSite>) {
          s += " vertex=" + site.vertex + " gaps=" + std::to_string(site.gap_a) + "," + std::to_string(site.gap_b);
        } else {
          s += " saddle=" + site.saddle + " extremum=" + site.extremum;
        }
      },
      m.site);
  return s;
}

MSGraph apply_move(const MSGraph& g, const MoveInstance& m) {
  const bool site_ok = std::visit(
      [&](const auto& site) {
        using T = std::decay_t<decltype(site)>;
        switch (m.kind) {
          case MoveKind::FaceMax:
          case MoveKind::FaceMin: return std::is_same_v<T, FaceSite>;
          case MoveKind::EdgeMax:
          case MoveKind::EdgeMin: return std::is_same_v<T, EdgeSite>;
          case MoveKind::VertexMax:
          case MoveKind::VertexMin: return std::is_same_v<T, VertexSite>;
          default: return std::is_same_v<T, CancelSite>;
        }
      },
      m.site);
  if (!site_ok) reject(m, "site type does not fit the move kind");
  const MorseIndex ext = extremum_of(m.kind);
  switch (m.kind) {
    case MoveKind::FaceMax:
    case MoveKind::FaceMin: return face_move(g, m, ext);
    case MoveKind::EdgeMax:
    case MoveKind::EdgeMin: return edge_move(g, m, ext);
    case MoveKind::VertexMax:
    case MoveKind::VertexMin: return vertex_move(g, m, ext);
    default: return cancel(g, m);
  }
}

std::vector<MoveInstance> enumerate_additions(const MSGraph& g) {
  std::vector<MoveInstance> out;
  const std::size_t nf = faces(g).size();
  for (std::size_t f = 0; f < nf; ++f) {
    out.push_back({MoveKind::FaceMax, FaceSite{f}});
    out.push_back({MoveKind::FaceMin, FaceSite{f}});
  }
  for (MoveKind k : {MoveKind::EdgeMax, MoveKind::EdgeMin}) {
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      if (g.edge_kind(e) == edge_kind_to(extremum_of(k))) out.push_back({k, EdgeSite{g.edge_id(e)}});
    }
  }
  for (MoveKind k : {MoveKind::VertexMax, MoveKind::VertexMin}) {
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      if (g.index(v) != extremum_of(k)) continue;
      const std::size_t deg = g.degree(v);
      for (std::size_t i = 0; i < deg; ++i) {
        for (std::size_t j = i + 1; j < deg; ++j) out.push_back({k, VertexSite{g.vertex(v).id, i, j}});
      }
    }
  }
  return out;
}

std::vector<MoveInstance> enumerate_moves(const MSGraph& g) {
  auto out = enumerate_additions(g);
  for (std::size_t s = 0; s < g.vertex_count(); ++s) {
    if (g.index(s) != MorseIndex::Saddle) continue;
    for (MorseIndex ext : {MorseIndex::Maximum, MorseIndex::Minimum}) {
      std::vector<std::size_t> seen;
      for (auto d : g.rotation(s)) {
        std::size_t x = g.other_end(d);
        if (g.index(x) != ext || std::find(seen.begin(), seen.end(), x) != seen.end()) continue;
        seen.push_back(x);
        MoveInstance m{with_extremum(MoveKind::CancelFaceMax, ext), CancelSite{g.vertex(s).id, g.vertex(x).id}};
        try {
          m.kind = plan_cancel(g, m).kind;
          cancel(g, m);
          out.push_back(std::move(m));
        } catch (const DomainError&) {
          // pattern does not match here
        }
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------- search

namespace {

struct SearchNode {
  MSGraph graph;
  CanonicalCode parent;
  std::size_t depth = 0;
};

using SearchMap = std::unordered_map<CanonicalCode, SearchNode, CanonicalCodeHash>;

std::vector<CanonicalCode> chain_to_root(const SearchMap& side, const CanonicalCode& from) {
  std::vector<CanonicalCode> chain{from};
  while (side.at(chain.back()).depth > 0) chain.push_back(side.at(chain.back()).parent);
  return chain;
}

// A move on `cur` whose result has the given code.  Exists whenever the two
// classes are adjacent, since every move has an inverse.
std::pair<MoveInstance, MSGraph> step_towards(const MSGraph& cur, const CanonicalCode& target) {
  for (const auto& m : enumerate_moves(cur)) {
    MSGraph next = apply_move(cur, m);
    if (canonical_code(next) == target) return {m, std::move(next)};
  }
  throw std::logic_error("connect: adjacent class not reachable by a single move");
}

}  // namespace

std::optional<std::vector<MoveInstance>> connect(const MSGraph& g, const MSGraph& h, std::size_t max_depth,
                                                 std::optional<std::size_t> max_vertices) {
  const CanonicalCode cg = canonical_code(g), ch = canonical_code(h);
  if (cg == ch) return std::vector<MoveInstance>{};
  std::array<SearchMap, 2> side;
  side[0].emplace(cg, SearchNode{g, cg, 0});
  side[1].emplace(ch, SearchNode{h, ch, 0});
  std::array<std::vector<CanonicalCode>, 2> frontier{std::vector<CanonicalCode>{cg}, std::vector<CanonicalCode>{ch}};
  std::array<std::size_t, 2> depth{0, 0};
  std::optional<CanonicalCode> meet;

  while (!meet && depth[0] + depth[1] < max_depth && !frontier[0].empty() && !frontier[1].empty()) {
    const int s = frontier[0].size() <= frontier[1].size() ? 0 : 1;
    std::vector<CanonicalCode> next;
    std::size_t best_total = static_cast<std::size_t>(-1);
    for (const auto& c : frontier[s]) {
      const MSGraph cur = side[s].at(c).graph;
      for (const auto& m : enumerate_moves(cur)) {
        if (max_vertices && !is_cancellation(m.kind) && cur.vertex_count() + 2 > *max_vertices) continue;
        MSGraph nb = apply_move(cur, m);
        CanonicalCode code = canonical_code(nb);
        if (side[s].count(code)) continue;
        side[s].emplace(code, SearchNode{std::move(nb), c, depth[s] + 1});
        next.push_back(code);
        auto other = side[1 - s].find(code);
        if (other != side[1 - s].end()) {
          std::size_t total = depth[s] + 1 + other->second.depth;
          if (total < best_total || (total == best_total && code < *meet)) {
            best_total = total;
            meet = code;
          }
        }
      }
    }
    std::sort(next.begin(), next.end());
    frontier[s] = std::move(next);
    ++depth[s];
  }
  if (!meet) return std::nullopt;

  std::vector<MoveInstance> path;
  // Forward half: replay the recorded parents from g.
  auto fwd = chain_to_root(side[0], *meet);
  std::reverse(fwd.begin(), fwd.end());
  MSGraph cur = g;
  for (std::size_t i = 1; i < fwd.size(); ++i) {
    auto [m, next] = step_towards(cur, fwd[i]);
    path.push_back(std::move(m));
    cur = std::move(next);
  }
  // Backward half: walk from the meeting class towards h.
  auto bwd = chain_to_root(side[1], *meet);
  for (std::size_t i = 1; i < bwd.size(); ++i) {
    auto [m, next] = step_towards(cur, bwd[i]);
    path.push_back(std::move(m));
    cur = std::move(next);
  }
  return path;
}

std::vector<MSGraph> census(const MSGraph& g, std::size_t n_max) {
  std::map<CanonicalCode, MSGraph> seen;
  if (g.vertex_count() > n_max) return {};
  seen.emplace(canonical_code(g), g);
  std::vector<const MSGraph*> frontier{&seen.begin()->second};
  while (!frontier.empty()) {
    std::vector<const MSGraph*> next;
    for (const MSGraph* cur : frontier) {
      if (cur->vertex_count() + 2 > n_max) continue;
      for (const auto& m : enumerate_additions(*cur)) {
        MSGraph nb = apply_move(*cur, m);
        auto [it, fresh] = seen.emplace(canonical_code(nb), std::move(nb));
        if (fresh) next.push_back(&it->second);
      }
    }
    frontier = std::move(next);
  }
  std::vector<MSGraph> out;
  out.reserve(seen.size());
  for (auto& [code, graph] : seen) out.push_back(std::move(graph));
  return out;
}

std::set<CanonicalCode> reachable_codes(const MSGraph& g, std::size_t n_max) {
  std::set<CanonicalCode> out;
  for (const auto& graph : census(g, n_max)) out.insert(canonical_code(graph));
  return out;
}

}  // namespace msk
