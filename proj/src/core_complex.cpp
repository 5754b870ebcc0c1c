#include "msk/core_complex.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "msk/errors.hpp"

namespace msk {

std::string_view to_string(MorseIndex index) {
  switch (index) {
    case MorseIndex::Minimum: return "min";
    case MorseIndex::Saddle: return "saddle";
    case MorseIndex::Maximum: return "max";
  }
  return "?";
}

std::string_view to_string(EdgeKind kind) {
  return kind == EdgeKind::SaddleMax ? "saddle-max" : "saddle-min";
}

std::string_view to_string(Violation v) {
  switch (v) {
    case Violation::SaddleDegree: return "saddle degree != 4";
    case Violation::SaddleAlternation: return "saddle neighbours do not alternate max/min";
    case Violation::BadEdgeEndpoints: return "edge does not join a saddle to an extremum";
    case Violation::MinMaxEdge: return "min-max edge";
    case Violation::EdgeKindMismatch: return "edge kind disagrees with endpoints";
    case Violation::EulerCount: return "#min - #saddle + #max != 2";
    case Violation::NotConnected: return "graph not connected";
    case Violation::NotSphere: return "V - E + F != 2";
    case Violation::NonQuadrangleFace: return "face is not a quadrangle";
  }
  return "?";
}

// ---------------------------------------------------------------- MSGraph

MSGraph MSGraph::base_sphere() {
  MSGraph g;
  g.vertices_ = {{"v0", MorseIndex::Minimum}, {"v1", MorseIndex::Maximum}};
  g.rotations_.assign(2, {});
  return g;
}

void MSGraph::index_darts() {
  dart_vertex_.assign(dart_ids_.size(), 0);
  dart_slot_.assign(dart_ids_.size(), 0);
  for (std::size_t v = 0; v < rotations_.size(); ++v) {
    for (std::size_t k = 0; k < rotations_[v].size(); ++k) {
      dart_vertex_[rotations_[v][k]] = v;
      dart_slot_[rotations_[v][k]] = k;
    }
  }
}

std::optional<std::size_t> MSGraph::find_vertex(std::string_view id) const {
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    if (vertices_[v].id == id) return v;
  }
  return std::nullopt;
}

std::optional<std::size_t> MSGraph::find_edge(std::string_view id) const {
  for (std::size_t e = 0; e < edge_ids_.size(); ++e) {
    if (edge_ids_[e] == id) return e;
  }
  return std::nullopt;
}

std::size_t MSGraph::count(MorseIndex index) const {
  return static_cast<std::size_t>(
      std::count_if(vertices_.begin(), vertices_.end(), [&](const auto& v) { return v.index == index; }));
}

std::size_t MSGraph::next_around(std::size_t d) const {
  const auto& rot = rotations_[dart_vertex_[d]];
  return rot[(dart_slot_[d] + 1) % rot.size()];
}

std::size_t MSGraph::prev_around(std::size_t d) const {
  const auto& rot = rotations_[dart_vertex_[d]];
  return rot[(dart_slot_[d] + rot.size() - 1) % rot.size()];
}

bool MSGraph::is_base_sphere() const {
  return edge_count() == 0 && vertex_count() == 2 && count(MorseIndex::Minimum) == 1 &&
         count(MorseIndex::Maximum) == 1;
}

MSGraph MSGraph::mirrored() const {
  MSGraph m = *this;
  for (auto& rot : m.rotations_) std::reverse(rot.begin(), rot.end());
  m.index_darts();
  return m;
}

// ---------------------------------------------------------------- encoding

namespace {

std::optional<EdgeKind> parse_kind(const std::string& s) {
  if (s == "saddle-max") return EdgeKind::SaddleMax;
  if (s == "saddle-min") return EdgeKind::SaddleMin;
  return std::nullopt;
}

EdgeKind kind_from_ends(MorseIndex a, MorseIndex b) {
  return (a == MorseIndex::Maximum || b == MorseIndex::Maximum) ? EdgeKind::SaddleMax
                                                                  : EdgeKind::SaddleMin;
}

}  // namespace

std::vector<std::string> structural_errors(const GraphEncoding& enc) {
  std::vector<std::string> errs;
  std::set<std::string> vids;
  for (const auto& v : enc.vertices) {
    if (!vids.insert(v.id).second) errs.push_back("duplicate vertex id '" + v.id + "'");
    if (v.index < 0 || v.index > 2) errs.push_back("vertex '" + v.id + "' has index outside {0,1,2}");
  }
  std::map<std::string, std::string> dart_edge;
  for (const auto& [d, e] : enc.darts) {
    if (!dart_edge.emplace(d, e).second) errs.push_back("duplicate dart id '" + d + "'");
  }
  std::set<std::string> eids;
  for (const auto& e : enc.edges) {
    if (!eids.insert(e.id).second) errs.push_back("duplicate edge id '" + e.id + "'");
    if (e.ends.size() != 2) {
      errs.push_back("edge '" + e.id + "' must have exactly two darts");
      continue;
    }
    if (e.ends[0] == e.ends[1]) errs.push_back("edge '" + e.id + "' uses the same dart twice");
    for (const auto& d : e.ends) {
      auto it = dart_edge.find(d);
      if (it == dart_edge.end()) {
        errs.push_back("edge '" + e.id + "' references unknown dart '" + d + "'");
      } else if (it->second != e.id) {
        errs.push_back("dart '" + d + "' belongs to edge '" + it->second + "' but is listed by '" + e.id + "'");
      }
    }
    if (e.kind && !parse_kind(*e.kind)) errs.push_back("edge '" + e.id + "' has unknown kind '" + *e.kind + "'");
  }
  for (const auto& [d, e] : dart_edge) {
    if (!eids.count(e)) errs.push_back("dart '" + d + "' references unknown edge '" + e + "'");
  }
  std::map<std::string, int> seen;
  std::set<std::string> rot_vertices;
  for (const auto& [v, darts] : enc.rotations) {
    if (!vids.count(v)) errs.push_back("rotation for unknown vertex '" + v + "'");
    if (!rot_vertices.insert(v).second) errs.push_back("two rotations for vertex '" + v + "'");
    for (const auto& d : darts) {
      if (!dart_edge.count(d)) errs.push_back("rotation of '" + v + "' lists unknown dart '" + d + "'");
      if (++seen[d] == 2) errs.push_back("dart '" + d + "' appears in more than one rotation slot");
    }
  }
  for (const auto& [d, e] : dart_edge) {
    if (!seen.count(d)) errs.push_back("dart '" + d + "' is in no rotation");
  }
  return errs;
}

MSGraph from_encoding(const GraphEncoding& enc) {
  auto errs = structural_errors(enc);
  if (!errs.empty()) {
    std::string msg = "malformed graph:";
    for (const auto& e : errs) msg += "\n  " + e;
    throw MalformedInput(msg);
  }
  MSGraph g;
  std::unordered_map<std::string, std::size_t> vindex;
  for (const auto& v : enc.vertices) {
    vindex[v.id] = g.vertices_.size();
    g.vertices_.push_back({v.id, static_cast<MorseIndex>(v.index)});
  }
  std::unordered_map<std::string, std::size_t> dindex;
  for (const auto& e : enc.edges) {
    dindex[e.ends[0]] = 2 * g.edge_ids_.size();
    dindex[e.ends[1]] = 2 * g.edge_ids_.size() + 1;
    g.edge_ids_.push_back(e.id);
    g.dart_ids_.push_back(e.ends[0]);
    g.dart_ids_.push_back(e.ends[1]);
  }
  g.rotations_.assign(g.vertices_.size(), {});
  for (const auto& [v, darts] : enc.rotations) {
    auto& rot = g.rotations_[vindex.at(v)];
    for (const auto& d : darts) rot.push_back(dindex.at(d));
  }
  g.index_darts();
  for (std::size_t e = 0; e < enc.edges.size(); ++e) {
    const auto& kind = enc.edges[e].kind;
    g.edge_kinds_.push_back(kind ? *parse_kind(*kind)
                                 : kind_from_ends(g.index(g.dart_vertex(2 * e)), g.index(g.dart_vertex(2 * e + 1))));
  }
  return g;
}

GraphEncoding to_encoding(const MSGraph& g) {
  GraphEncoding enc;
  for (const auto& v : g.vertices()) enc.vertices.push_back({v.id, static_cast<int>(v.index), std::nullopt});
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    std::vector<std::string> darts;
    for (auto d : g.rotation(v)) darts.push_back(g.dart_id(d));
    enc.rotations.emplace_back(g.vertex(v).id, std::move(darts));
  }
  for (std::size_t d = 0; d < g.dart_count(); ++d) enc.darts.emplace_back(g.dart_id(d), g.edge_id(MSGraph::edge_of(d)));
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    enc.edges.push_back({g.edge_id(e), {g.dart_id(2 * e), g.dart_id(2 * e + 1)}, std::string(to_string(g.edge_kind(e)))});
  }
  return enc;
}

// ---------------------------------------------------------------- faces

std::vector<Face> faces(const MSGraph& g) {
  std::vector<Face> out;
  if (g.edge_count() == 0) {
    Face f;
    f.degenerate = true;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) f.corners.push_back(v);
    std::stable_sort(f.corners.begin(), f.corners.end(),
                     [&](std::size_t a, std::size_t b) { return g.index(a) < g.index(b); });
    out.push_back(std::move(f));
    return out;
  }
  std::vector<bool> seen(g.dart_count(), false);
  for (std::size_t d0 = 0; d0 < g.dart_count(); ++d0) {
    if (seen[d0]) continue;
    Face f;
    for (std::size_t d = d0; !seen[d]; d = g.face_step(d)) {
      seen[d] = true;
      f.darts.push_back(d);
      f.corners.push_back(g.dart_vertex(d));
    }
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<std::size_t> face_of_darts(const MSGraph& g) {
  std::vector<std::size_t> owner(g.dart_count(), 0);
  auto fs = faces(g);
  for (std::size_t f = 0; f < fs.size(); ++f) {
    for (auto d : fs[f].darts) owner[d] = f;
  }
  return owner;
}

int euler_characteristic(const MSGraph& g) {
  // The edgeless base sphere has no honest cell structure; report the sphere's value.
  if (g.edge_count() == 0) return g.is_base_sphere() ? 2 : static_cast<int>(g.vertex_count()) + 1;
  return static_cast<int>(g.vertex_count()) - static_cast<int>(g.edge_count()) + static_cast<int>(faces(g).size());
}

// ---------------------------------------------------------------- validation

bool ValidationReport::has(Violation v) const {
  return std::any_of(violations.begin(), violations.end(), [&](const auto& i) { return i.kind == v; });
}

ValidationReport validate(const MSGraph& g) {
  ValidationReport rep;
  auto add = [&](Violation v, std::string detail) { rep.violations.push_back({v, std::move(detail)}); };
  const auto is_extremum = [&](std::size_t v) { return g.index(v) != MorseIndex::Saddle; };

  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    std::size_t a = g.dart_vertex(2 * e), b = g.dart_vertex(2 * e + 1);
    MorseIndex ia = g.index(a), ib = g.index(b);
    const std::string where = "edge '" + g.edge_id(e) + "'";
    if (is_extremum(a) && is_extremum(b) && ia != ib) {
      add(Violation::MinMaxEdge, where);
    } else if (!((ia == MorseIndex::Saddle) ^ (ib == MorseIndex::Saddle))) {
      add(Violation::BadEdgeEndpoints, where);
    } else {
      MorseIndex ext = ia == MorseIndex::Saddle ? ib : ia;
      if (g.edge_kind(e) != edge_kind_to(ext)) add(Violation::EdgeKindMismatch, where);
    }
  }

  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (g.index(v) != MorseIndex::Saddle) continue;
    const auto& rot = g.rotation(v);
    const std::string where = "saddle '" + g.vertex(v).id + "'";
    if (rot.size() != 4) {
      add(Violation::SaddleDegree, where + " has degree " + std::to_string(rot.size()));
      continue;
    }
    for (std::size_t k = 0; k < 4; ++k) {
      MorseIndex here = g.index(g.other_end(rot[k]));
      MorseIndex next = g.index(g.other_end(rot[(k + 1) % 4]));
      if (here == MorseIndex::Saddle || here == next) {
        add(Violation::SaddleAlternation, where);
        break;
      }
    }
  }

  const long n0 = static_cast<long>(g.count(MorseIndex::Minimum));
  const long n1 = static_cast<long>(g.count(MorseIndex::Saddle));
  const long n2 = static_cast<long>(g.count(MorseIndex::Maximum));
  if (n0 - n1 + n2 != 2) {
    add(Violation::EulerCount, std::to_string(n0) + " - " + std::to_string(n1) + " + " + std::to_string(n2));
  }

  if (g.edge_count() == 0) {
    if (g.vertex_count() != 2) add(Violation::NotConnected, "edgeless graph with " + std::to_string(g.vertex_count()) + " vertices");
    return rep;
  }

  std::vector<bool> reached(g.vertex_count(), false);
  std::vector<std::size_t> stack{g.dart_vertex(0)};
  reached[stack.back()] = true;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    for (auto d : g.rotation(v)) {
      std::size_t w = g.other_end(d);
      if (!reached[w]) {
        reached[w] = true;
        stack.push_back(w);
      }
    }
  }
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (!reached[v]) {
      add(Violation::NotConnected, "vertex '" + g.vertex(v).id + "' unreachable");
      return rep;
    }
  }

  auto fs = faces(g);
  const long chi = static_cast<long>(g.vertex_count()) - static_cast<long>(g.edge_count()) + static_cast<long>(fs.size());
  if (chi != 2) add(Violation::NotSphere, "V - E + F = " + std::to_string(chi));
  for (std::size_t f = 0; f < fs.size(); ++f) {
    const auto& c = fs[f].corners;
    bool quad = c.size() == 4;
    if (quad) {
      // corners must read min, saddle, max, saddle up to rotation
      std::array<int, 4> idx{};
      for (std::size_t k = 0; k < 4; ++k) idx[k] = static_cast<int>(g.index(c[k]));
      bool match = false;
      for (std::size_t r = 0; r < 4 && !match; ++r) {
        match = idx[r] == 0 && idx[(r + 1) % 4] == 1 && idx[(r + 2) % 4] == 2 && idx[(r + 3) % 4] == 1;
      }
      quad = match;
    }
    if (!quad) add(Violation::NonQuadrangleFace, "face " + std::to_string(f) + " has " + std::to_string(c.size()) + " corners");
  }
  return rep;
}

ValidationReport validate(const GraphEncoding& enc) {
  ValidationReport rep;
  rep.structural_errors = structural_errors(enc);
  if (!rep.structural_errors.empty()) return rep;
  return validate(from_encoding(enc));
}

// ---------------------------------------------------------------- canonical code

namespace {

constexpr std::uint32_t kUnset = 0xffffffffU;

// Labels darts in BFS order from `root`, following twin then rotation
// successor (predecessor when mirrored).  The emitted words describe both
// permutations on labelled darts, so equal codes mean isomorphic rooted maps.
// Returns false as soon as the code exceeds `best`.
bool rooted_code(const MSGraph& g, std::size_t root, bool mirror, std::vector<std::uint32_t>& out,
                 const std::vector<std::uint32_t>* best, std::vector<std::uint32_t>& label,
                 std::vector<std::size_t>& order) {
  std::fill(label.begin(), label.end(), kUnset);
  order.clear();
  out.clear();
  label[root] = 0;
  order.push_back(root);
  bool tied = best != nullptr;
  auto emit = [&](std::uint32_t w) {
    if (tied) {
      std::uint32_t b = (*best)[out.size()];
      if (w > b) return false;
      if (w < b) tied = false;
    }
    out.push_back(w);
    return true;
  };
  for (std::size_t i = 0; i < order.size(); ++i) {
    std::size_t d = order[i];
    if (!emit(static_cast<std::uint32_t>(g.index(g.dart_vertex(d))))) return false;
    for (std::size_t nb : {MSGraph::twin(d), mirror ? g.prev_around(d) : g.next_around(d)}) {
      if (label[nb] == kUnset) {
        label[nb] = static_cast<std::uint32_t>(order.size());
        order.push_back(nb);
      }
      if (!emit(label[nb])) return false;
    }
  }
  return true;
}

}  // namespace

std::string CanonicalCode::hex() const {
  std::string s;
  char buf[16];
  for (std::size_t i = 0; i < words.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%s%x", i ? "." : "", words[i]);
    s += buf;
  }
  return s;
}

std::size_t CanonicalCodeHash::operator()(const CanonicalCode& c) const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (auto w : c.words) {
    h ^= w;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

CanonicalCode canonical_code(const MSGraph& g, bool allow_mirror) {
  CanonicalCode code;
  const auto v = static_cast<std::uint32_t>(g.vertex_count());
  if (g.edge_count() == 0) {
    code.words = {kUnset, v, static_cast<std::uint32_t>(g.count(MorseIndex::Minimum)),
                  static_cast<std::uint32_t>(g.count(MorseIndex::Maximum))};
    return code;
  }
  // Roots: darts from a saddle towards a maximum, an isomorphism-invariant set.
  std::vector<std::size_t> roots;
  for (std::size_t d = 0; d < g.dart_count(); ++d) {
    if (g.index(g.dart_vertex(d)) == MorseIndex::Saddle && g.index(g.other_end(d)) == MorseIndex::Maximum) {
      roots.push_back(d);
    }
  }
  if (roots.empty()) {
    for (std::size_t d = 0; d < g.dart_count(); ++d) roots.push_back(d);
  }
  std::vector<std::uint32_t> best, cur, label(g.dart_count());
  std::vector<std::size_t> order;
  bool have = false;
  for (int m = 0; m < (allow_mirror ? 2 : 1); ++m) {
    for (auto r : roots) {
      if (rooted_code(g, r, m == 1, cur, have ? &best : nullptr, label, order)) {
        if (!have || cur < best) best.swap(cur);
        have = true;
      }
    }
  }
  code.words.reserve(best.size() + 2);
  code.words.push_back(v);
  code.words.push_back(static_cast<std::uint32_t>(g.edge_count()));
  code.words.insert(code.words.end(), best.begin(), best.end());
  return code;
}

bool is_isomorphic(const MSGraph& a, const MSGraph& b, bool allow_mirror) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  return canonical_code(a, allow_mirror) == canonical_code(b, allow_mirror);
}

// ---------------------------------------------------------------- MapEditor

MapEditor::MapEditor(const MSGraph& g) {
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    vertices_.push_back({g.vertex(v), g.rotation(v), true});
    vertex_ids_.insert(g.vertex(v).id);
  }
  for (std::size_t d = 0; d < g.dart_count(); ++d) {
    darts_.push_back({g.dart_vertex(d), MSGraph::twin(d), g.dart_id(d), g.edge_id(MSGraph::edge_of(d)), true});
    dart_ids_.insert(g.dart_id(d));
    edge_ids_.insert(g.edge_id(MSGraph::edge_of(d)));
  }
}

std::string MapEditor::fresh(char prefix, std::size_t& counter, std::unordered_set<std::string>& taken) {
  for (;;) {
    std::string id = std::string(1, prefix) + std::to_string(counter++);
    if (taken.insert(id).second) return id;
  }
}

std::size_t MapEditor::add_vertex(MorseIndex index) {
  vertices_.push_back({{fresh('v', vertex_counter_, vertex_ids_), index}, {}, true});
  return vertices_.size() - 1;
}

std::size_t MapEditor::new_dart(std::size_t v) {
  darts_.push_back({v, kNoDart, fresh('d', dart_counter_, dart_ids_), {}, true});
  return darts_.size() - 1;
}

std::size_t MapEditor::position(std::size_t d) const {
  const auto& rot = vertices_[darts_[d].vertex].rotation;
  auto it = std::find(rot.begin(), rot.end(), d);
  if (it == rot.end()) throw std::logic_error("dart not in its vertex rotation");
  return static_cast<std::size_t>(it - rot.begin());
}

std::pair<std::size_t, std::size_t> MapEditor::insert_edge(std::size_t u, std::size_t after_u, std::size_t v,
                                                           std::size_t after_v) {
  auto place = [&](std::size_t w, std::size_t after, std::size_t d) {
    auto& rot = vertices_[w].rotation;
    if (after == kNoDart) {
      if (!rot.empty()) throw std::logic_error("insert_edge: anchor dart required");
      rot.push_back(d);
    } else {
      if (darts_[after].vertex != w) throw std::logic_error("insert_edge: anchor dart at wrong vertex");
      rot.insert(rot.begin() + static_cast<std::ptrdiff_t>(position(after) + 1), d);
    }
  };
  std::size_t du = new_dart(u);
  std::size_t dv = new_dart(v);
  darts_[du].twin = dv;
  darts_[dv].twin = du;
  darts_[du].edge_id = darts_[dv].edge_id = fresh('e', edge_counter_, edge_ids_);
  place(u, after_u, du);
  place(v, after_v, dv);
  return {du, dv};
}

std::size_t MapEditor::subdivide(std::size_t d, std::size_t w) {
  std::size_t t = darts_[d].twin;
  std::size_t wd = new_dart(w);
  std::size_t wt = new_dart(w);
  darts_[d].twin = wd;
  darts_[wd].twin = d;
  darts_[t].twin = wt;
  darts_[wt].twin = t;
  darts_[wd].edge_id = darts_[d].edge_id;
  darts_[t].edge_id = darts_[wt].edge_id = fresh('e', edge_counter_, edge_ids_);
  vertices_[w].rotation = {wd, wt};
  return wd;
}

void MapEditor::remove_edge(std::size_t d) {
  for (std::size_t x : {d, darts_[d].twin}) {
    auto& rot = vertices_[darts_[x].vertex].rotation;
    rot.erase(std::remove(rot.begin(), rot.end(), x), rot.end());
    darts_[x].alive = false;
  }
}

void MapEditor::remove_vertex(std::size_t v) {
  if (!vertices_[v].rotation.empty()) throw std::logic_error("remove_vertex: vertex still has darts");
  vertices_[v].alive = false;
}

void MapEditor::splice(std::size_t slot, const std::vector<std::size_t>& darts) {
  for (auto d : darts) {
    auto& old = vertices_[darts_[d].vertex].rotation;
    old.erase(std::remove(old.begin(), old.end(), d), old.end());
  }
  std::size_t v = darts_[slot].vertex;
  auto& rot = vertices_[v].rotation;
  auto pos = static_cast<std::ptrdiff_t>(position(slot));
  rot.erase(rot.begin() + pos);
  rot.insert(rot.begin() + pos, darts.begin(), darts.end());
  for (auto d : darts) darts_[d].vertex = v;
}

void MapEditor::move_darts(const std::vector<std::size_t>& darts, std::size_t w) {
  for (auto d : darts) {
    auto& old = vertices_[darts_[d].vertex].rotation;
    old.erase(std::remove(old.begin(), old.end(), d), old.end());
    vertices_[w].rotation.push_back(d);
    darts_[d].vertex = w;
  }
}

std::size_t MapEditor::next_around(std::size_t d) const {
  const auto& rot = vertices_[darts_[d].vertex].rotation;
  return rot[(position(d) + 1) % rot.size()];
}

std::vector<std::size_t> MapEditor::face_orbit(std::size_t d) const {
  std::vector<std::size_t> orbit;
  std::size_t x = d;
  do {
    orbit.push_back(x);
    x = face_step(x);
  } while (x != d);
  return orbit;
}

std::size_t MapEditor::unique_corner_gap(std::size_t d, MorseIndex index) const {
  auto orbit = face_orbit(d);
  std::size_t found = kNoDart;
  int hits = 0;
  for (std::size_t k = 0; k < orbit.size(); ++k) {
    if (vertices_[darts_[orbit[k]].vertex].data.index != index) continue;
    ++hits;
    found = darts_[orbit[(k + orbit.size() - 1) % orbit.size()]].twin;
  }
  if (hits != 1) {
    throw DomainError("face has " + std::to_string(hits) + " corners of type " + std::string(to_string(index)) +
                      ", expected exactly one");
  }
  return found;
}

MSGraph MapEditor::finish() const {
  MSGraph g;
  std::vector<std::size_t> vnew(vertices_.size(), kNoDart);
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    if (!vertices_[v].alive) continue;
    vnew[v] = g.vertices_.size();
    g.vertices_.push_back(vertices_[v].data);
  }
  std::vector<std::size_t> dnew(darts_.size(), kNoDart);
  for (std::size_t d = 0; d < darts_.size(); ++d) {
    if (!darts_[d].alive || dnew[d] != kNoDart) continue;
    std::size_t t = darts_[d].twin;
    std::size_t e = g.edge_ids_.size();
    dnew[d] = 2 * e;
    dnew[t] = 2 * e + 1;
    g.edge_ids_.push_back(darts_[d].edge_id);
    g.dart_ids_.push_back(darts_[d].id);
    g.dart_ids_.push_back(darts_[t].id);
    g.edge_kinds_.push_back(kind_from_ends(vertices_[darts_[d].vertex].data.index,
                                           vertices_[darts_[t].vertex].data.index));
  }
  g.rotations_.assign(g.vertices_.size(), {});
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    if (!vertices_[v].alive) continue;
    for (auto d : vertices_[v].rotation) g.rotations_[vnew[v]].push_back(dnew[d]);
  }
  g.index_darts();
  return g;
}

}  // namespace msk
