#include "msk/slices.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <tuple>
#include <functional>
#include <set>
#include <sstream>

#include "msk/errors.hpp"

namespace msk {

// ---------------------------------------------------------------- forest

const CircleId& NestingForest::parent(const CircleId& c) const {
  auto it = parent_.find(c);
  if (it == parent_.end()) throw DomainError("unknown circle '" + c + "'");
  return it->second;
}

std::vector<CircleId> NestingForest::children(const CircleId& region) const {
  std::vector<CircleId> out;
  for (const auto& [c, p] : parent_) {
    if (p == region) out.push_back(c);
  }
  return out;
}

std::vector<CircleId> NestingForest::siblings(const CircleId& c) const {
  auto out = children(parent(c));
  out.erase(std::remove(out.begin(), out.end(), c), out.end());
  return out;
}

std::vector<CircleId> NestingForest::circles() const {
  std::vector<CircleId> out;
  for (const auto& [c, p] : parent_) out.push_back(c);
  return out;
}

bool NestingForest::encloses(const CircleId& a, const CircleId& c) const {
  if (a == kOuter) return true;
  for (CircleId x = c; x != kOuter; x = parent(x)) {
    if (x == a) return true;
  }
  return false;
}

// ---------------------------------------------------------------- events

namespace {

constexpr std::array<std::string_view, 6> kTags = {"min", "max", "merge_nn", "merge_n", "split_nn", "split_n"};
constexpr std::array<std::string_view, 6> kKindNames = {"Min",          "Max",           "MergeNonNesting",
                                                         "MergeNesting", "SplitNonNesting", "SplitNesting"};

bool is_subset(const std::vector<CircleId>& part, const std::vector<CircleId>& whole) {
  std::set<CircleId> seen;
  for (const auto& c : part) {
    if (!seen.insert(c).second) return false;
    if (std::find(whole.begin(), whole.end(), c) == whole.end()) return false;
  }
  return true;
}

bool contains(const std::vector<CircleId>& v, const CircleId& c) { return std::find(v.begin(), v.end(), c) != v.end(); }

}  // namespace

std::string_view to_string(EventKind k) { return kKindNames[static_cast<std::size_t>(k)]; }
std::string_view event_tag(EventKind k) { return kTags[static_cast<std::size_t>(k)]; }

std::optional<EventKind> parse_event_tag(std::string_view tag) {
  for (std::size_t i = 0; i < kTags.size(); ++i) {
    if (kTags[i] == tag) return static_cast<EventKind>(i);
  }
  return std::nullopt;
}

std::vector<double> EmbeddingHistory::times() const {
  std::vector<double> t;
  for (const auto& e : events) t.push_back(e.time);
  return t;
}

NestingForest apply_event(const NestingForest& forest, const Event& e) {
  NestingForest f = forest;
  const std::string where = std::string(to_string(e.kind())) + " at t=" + format_value(e.time) + ": ";
  auto need = [&](const CircleId& c) {
    if (!f.contains(c)) throw DomainError(where + "'" + c + "' is not a current circle");
  };
  auto fresh = [&](const CircleId& c) {
    if (c.empty() || c == kOuter || f.contains(c)) throw DomainError(where + "'" + c + "' cannot name a new circle");
  };
  std::visit(
      [&](const auto& ev) {
        using T = std::decay_t<decltype(ev)>;
        if constexpr (std::is_same_v<T, MinEvent>) {
          if (ev.region != kOuter) need(ev.region);
          fresh(ev.created);
          f.add(ev.created, ev.region);
        } else if constexpr (std::is_same_v<T, MaxEvent>) {
          need(ev.circle);
          if (!f.children(ev.circle).empty()) throw DomainError(where + "'" + ev.circle + "' still encloses circles");
          f.remove(ev.circle);
        } else if constexpr (std::is_same_v<T, MergeNonNestingEvent>) {
          need(ev.a);
          need(ev.b);
          if (ev.a == ev.b) throw DomainError(where + "a circle cannot merge with itself");
          if (f.parent(ev.a) != f.parent(ev.b)) throw DomainError(where + "'" + ev.a + "' and '" + ev.b + "' are not siblings");
          const CircleId p = f.parent(ev.a);
          auto ch = f.children(ev.a);
          for (const auto& c : f.children(ev.b)) ch.push_back(c);
          f.remove(ev.a);
          f.remove(ev.b);
          fresh(ev.created);
          f.add(ev.created, p);
          for (const auto& c : ch) f.set_parent(c, ev.created);
        } else if constexpr (std::is_same_v<T, MergeNestingEvent>) {
          need(ev.outer);
          need(ev.inner);
          if (f.parent(ev.inner) != ev.outer) {
            throw DomainError(where + "'" + ev.inner + "' is not directly inside '" + ev.outer + "'");
          }
          const CircleId p = f.parent(ev.outer);
          auto annulus = f.children(ev.outer);
          annulus.erase(std::remove(annulus.begin(), annulus.end(), ev.inner), annulus.end());
          auto hole = f.children(ev.inner);
          f.remove(ev.outer);
          f.remove(ev.inner);
          fresh(ev.created);
          f.add(ev.created, p);
          for (const auto& c : annulus) f.set_parent(c, ev.created);
          for (const auto& c : hole) f.set_parent(c, p);
        } else if constexpr (std::is_same_v<T, SplitNonNestingEvent>) {
          need(ev.circle);
          const auto ch = f.children(ev.circle);
          if (!is_subset(ev.first_children, ch)) throw DomainError(where + "first part must take children of the circle");
          const CircleId p = f.parent(ev.circle);
          f.remove(ev.circle);
          fresh(ev.first);
          fresh(ev.second);
          if (ev.first == ev.second) throw DomainError(where + "the two parts need distinct names");
          f.add(ev.first, p);
          f.add(ev.second, p);
          for (const auto& c : ch) f.set_parent(c, contains(ev.first_children, c) ? ev.first : ev.second);
        } else {
          need(ev.circle);
          if (!is_subset(ev.inside, f.siblings(ev.circle))) {
            throw DomainError(where + "only siblings of the circle can end up inside the inner part");
          }
          const CircleId p = f.parent(ev.circle);
          const auto ch = f.children(ev.circle);
          f.remove(ev.circle);
          fresh(ev.outer);
          fresh(ev.inner);
          if (ev.outer == ev.inner) throw DomainError(where + "the two parts need distinct names");
          f.add(ev.outer, p);
          f.add(ev.inner, ev.outer);
          for (const auto& c : ch) f.set_parent(c, ev.outer);
          for (const auto& c : ev.inside) f.set_parent(c, ev.inner);
        }
      },
      e.data);
  return f;
}

void check_history(const EmbeddingHistory& h) {
  if (h.events.empty()) throw DomainError("history has no events");
  NestingForest f;
  for (std::size_t i = 0; i < h.events.size(); ++i) {
    if (i > 0 && !(h.events[i - 1].time < h.events[i].time)) {
      throw DomainError("event times must be strictly increasing (event " + std::to_string(i + 1) + ")");
    }
    f = apply_event(f, h.events[i]);
  }
  if (!f.empty()) throw DomainError("history ends with " + std::to_string(f.size()) + " circles still present");
}

NestingForest forest_after(const EmbeddingHistory& h, std::size_t k) {
  NestingForest f;
  for (std::size_t i = 0; i < k && i < h.events.size(); ++i) f = apply_event(f, h.events[i]);
  return f;
}

// ---------------------------------------------------------------- posets

int NestingPoset::index_of(const CircleId& c) const {
  auto it = std::find(elements.begin(), elements.end(), c);
  if (it == elements.end()) throw DomainError("'" + c + "' is not an element of the poset");
  return static_cast<int>(it - elements.begin());
}

bool NestingPoset::leq(std::size_t a, std::size_t b) const {
  for (int x = static_cast<int>(a); x >= 0; x = parent[static_cast<std::size_t>(x)]) {
    if (static_cast<std::size_t>(x) == b) return true;
  }
  return false;
}

NestingPoset nesting_poset(const NestingForest& f) {
  NestingPoset p;
  p.elements.push_back(kOuter);
  for (const auto& c : f.circles()) p.elements.push_back(c);
  p.parent.assign(p.elements.size(), -1);
  for (std::size_t i = 1; i < p.elements.size(); ++i) p.parent[i] = p.index_of(f.parent(p.elements[i]));
  return p;
}

namespace {

// The critical poset of event i: before the event for births of nothing new
// (Min, merges), after it for Max and splits.
bool critical_is_before(EventKind k) {
  return k == EventKind::Min || k == EventKind::MergeNonNesting || k == EventKind::MergeNesting;
}

}  // namespace

NestingPoset nesting_poset_at(const EmbeddingHistory& h, double value) {
  std::size_t k = 0;
  while (k < h.events.size() && h.events[k].time < value) ++k;
  if (k < h.events.size() && h.events[k].time == value) {
    return nesting_poset(forest_after(h, critical_is_before(h.events[k].kind()) ? k : k + 1));
  }
  return nesting_poset(forest_after(h, k));
}

std::string poset_code(const NestingPoset& p) {
  std::vector<std::vector<std::size_t>> kids(p.size());
  for (std::size_t i = 1; i < p.size(); ++i) kids[static_cast<std::size_t>(p.parent[i])].push_back(i);
  std::function<std::string(std::size_t)> code = [&](std::size_t n) {
    std::vector<std::string> parts;
    for (auto c : kids[n]) parts.push_back(code(c));
    std::sort(parts.begin(), parts.end());
    std::string s = "(";
    for (const auto& x : parts) s += x;
    return s + ")";
  };
  return code(0);
}

bool poset_isomorphic(const NestingPoset& a, const NestingPoset& b) {
  return a.size() == b.size() && poset_code(a) == poset_code(b);
}

std::string hasse_dot(const NestingPoset& p, const std::string& name) {
  std::ostringstream out;
  out << "digraph " << name << " {\n  rankdir=BT;\n";
  for (const auto& e : p.elements) out << "  \"" << e << "\";\n";
  for (std::size_t i = 1; i < p.size(); ++i) {
    out << "  \"" << p.elements[i] << "\" -> \"" << p.elements[static_cast<std::size_t>(p.parent[i])] << "\";\n";
  }
  out << "}\n";
  return out.str();
}

// ---------------------------------------------------------------- zigzag

std::vector<double> default_slicing(const EmbeddingHistory& h) {
  const auto t = h.times();
  std::vector<double> a;
  if (t.empty()) return a;
  a.push_back(t.front() - 1.0);
  for (std::size_t i = 1; i < t.size(); ++i) a.push_back((t[i - 1] + t[i]) / 2.0);
  a.push_back(t.back() + 1.0);
  return a;
}

bool is_slicing_of(const EmbeddingHistory& h, const std::vector<double>& slicing) {
  return is_slicing(h.times(), slicing);
}

namespace {

using Map = std::vector<std::pair<CircleId, CircleId>>;

Map identity_on(const NestingPoset& p) {
  Map m;
  for (const auto& e : p.elements) m.emplace_back(e, e);
  return m;
}

Map renaming(const NestingPoset& source, const std::map<CircleId, CircleId>& renamed) {
  Map m;
  for (const auto& e : source.elements) {
    auto it = renamed.find(e);
    m.emplace_back(e, it == renamed.end() ? e : it->second);
  }
  return m;
}

ZigzagArrow make_arrow(std::size_t left, ArrowDirection dir, Map map, const NestingPoset& source,
                       const NestingPoset& target) {
  ZigzagArrow a;
  a.left = left;
  a.direction = dir;
  std::vector<std::size_t> image;
  for (const auto& [x, y] : map) image.push_back(static_cast<std::size_t>(target.index_of(y)));
  std::vector<std::size_t> sorted = image;
  std::sort(sorted.begin(), sorted.end());
  a.injective = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  a.surjective = sorted.size() == target.size();
  bool preserving = true, reflecting = true;
  for (std::size_t i = 0; i < map.size(); ++i) {
    for (std::size_t j = 0; j < map.size(); ++j) {
      const bool s = source.leq(static_cast<std::size_t>(source.index_of(map[i].first)),
                                static_cast<std::size_t>(source.index_of(map[j].first)));
      const bool t = target.leq(image[i], image[j]);
      if (s && !t) preserving = false;
      if (t && !s) reflecting = false;
    }
  }
  a.order_preserving = preserving;
  a.isomorphism = a.injective && a.surjective && preserving && reflecting;
  a.map = std::move(map);
  return a;
}

}  // namespace

Zigzag zigzag(const EmbeddingHistory& h, const std::vector<double>& slicing) {
  check_history(h);
  if (!is_slicing_of(h, slicing)) {
    throw DomainError("slicing must interleave the event times: a0 < t1 < a1 < ... < tn < an");
  }
  Zigzag z;
  NestingForest before;
  z.nodes.push_back({slicing[0], false, nesting_poset(before)});
  for (std::size_t i = 0; i < h.events.size(); ++i) {
    const Event& e = h.events[i];
    const NestingForest after = apply_event(before, e);
    const NestingPoset P = nesting_poset(before), Q = nesting_poset(after);
    const bool pre = critical_is_before(e.kind());
    const NestingPoset& C = pre ? P : Q;
    const std::size_t l = z.nodes.size() - 1;  // index of N_{a_{i}}
    z.nodes.push_back({e.time, true, C});
    z.nodes.push_back({slicing[i + 1], false, Q});
    using D = ArrowDirection;
    std::visit(
        [&](const auto& ev) {
          using T = std::decay_t<decltype(ev)>;
          if constexpr (std::is_same_v<T, MinEvent>) {
            z.arrows.push_back(make_arrow(l, D::Backward, identity_on(C), C, P));
            z.arrows.push_back(make_arrow(l + 1, D::Forward, identity_on(C), C, Q));
          } else if constexpr (std::is_same_v<T, MaxEvent>) {
            z.arrows.push_back(make_arrow(l, D::Backward, identity_on(C), C, P));
            z.arrows.push_back(make_arrow(l + 1, D::Forward, identity_on(C), C, Q));
          } else if constexpr (std::is_same_v<T, MergeNonNestingEvent>) {
            z.arrows.push_back(make_arrow(l, D::Backward, identity_on(C), C, P));
            z.arrows.push_back(make_arrow(l + 1, D::Forward, renaming(C, {{ev.a, ev.created}, {ev.b, ev.created}}), C, Q));
          } else if constexpr (std::is_same_v<T, SplitNonNestingEvent>) {
            z.arrows.push_back(make_arrow(l, D::Backward, renaming(C, {{ev.first, ev.circle}, {ev.second, ev.circle}}), C, P));
            z.arrows.push_back(make_arrow(l + 1, D::Forward, identity_on(C), C, Q));
          } else if constexpr (std::is_same_v<T, MergeNestingEvent>) {
            z.arrows.push_back(make_arrow(l, D::Backward, identity_on(C), C, P));
            z.arrows.push_back(make_arrow(l + 1, D::Backward, renaming(Q, {{ev.created, ev.outer}}), Q, C));
          } else {
            z.arrows.push_back(make_arrow(l, D::Forward, renaming(P, {{ev.circle, ev.outer}}), P, C));
            z.arrows.push_back(make_arrow(l + 1, D::Forward, identity_on(C), C, Q));
          }
        },
        e.data);
    before = after;
  }
  return z;
}

Zigzag zigzag(const EmbeddingHistory& h) {
  check_history(h);
  return zigzag(h, default_slicing(h));
}

const char* const kGaloisCaveat =
    "reversal x -> max{y : phi(y) <= x} is only defined where that maximum exists; it is a Galois "
    "connection only when phi preserves joins, so the reversed zigzag need not be a persistence module";

std::vector<std::pair<CircleId, std::optional<CircleId>>> galois_reverse(const Zigzag& z, std::size_t arrow) {
  const ZigzagArrow& a = z.arrows.at(arrow);
  const bool fwd = a.direction == ArrowDirection::Forward;
  const NestingPoset& source = z.nodes[fwd ? a.left : a.left + 1].poset;
  const NestingPoset& target = z.nodes[fwd ? a.left + 1 : a.left].poset;
  std::vector<std::pair<CircleId, std::optional<CircleId>>> out;
  for (const auto& y : target.elements) {
    const std::size_t yi = static_cast<std::size_t>(target.index_of(y));
    std::vector<std::size_t> below;
    for (const auto& [x, fx] : a.map) {
      if (target.leq(static_cast<std::size_t>(target.index_of(fx)), yi)) below.push_back(static_cast<std::size_t>(source.index_of(x)));
    }
    std::optional<CircleId> best;
    for (auto c : below) {
      if (std::all_of(below.begin(), below.end(), [&](std::size_t o) { return source.leq(o, c); })) best = source.elements[c];
    }
    out.emplace_back(y, best);
  }
  return out;
}

// ---------------------------------------------------------------- level-set barcode

HeightGraph reeb_graph(const EmbeddingHistory& h) {
  check_history(h);
  HeightGraph r;
  std::map<CircleId, std::size_t> born;
  for (std::size_t i = 0; i < h.events.size(); ++i) {
    const Event& e = h.events[i];
    r.nodes.push_back({"t" + std::to_string(i + 1) + ":" + std::string(event_tag(e.kind())), e.time});
    auto end = [&](const CircleId& c) {
      r.arcs.emplace_back(born.at(c), i);
      born.erase(c);
    };
    std::visit(
        [&](const auto& ev) {
          using T = std::decay_t<decltype(ev)>;
          if constexpr (std::is_same_v<T, MinEvent>) {
            born[ev.created] = i;
          } else if constexpr (std::is_same_v<T, MaxEvent>) {
            end(ev.circle);
          } else if constexpr (std::is_same_v<T, MergeNonNestingEvent>) {
            end(ev.a);
            end(ev.b);
            born[ev.created] = i;
          } else if constexpr (std::is_same_v<T, MergeNestingEvent>) {
            end(ev.outer);
            end(ev.inner);
            born[ev.created] = i;
          } else if constexpr (std::is_same_v<T, SplitNonNestingEvent>) {
            end(ev.circle);
            born[ev.first] = i;
            born[ev.second] = i;
          } else {
            end(ev.circle);
            born[ev.outer] = i;
            born[ev.inner] = i;
          }
        },
        e.data);
  }
  return r;
}

Barcode levelset_barcode(const EmbeddingHistory& h) { return levelset_barcode(reeb_graph(h)); }

// ---------------------------------------------------------------- canonical code

std::string history_code(const EmbeddingHistory& h) {
  check_history(h);
  std::vector<std::size_t> twins;
  for (std::size_t i = 0; i < h.events.size(); ++i) {
    if (h.events[i].kind() == EventKind::SplitNonNesting) twins.push_back(i);
  }
  if (twins.size() > 20) throw DomainError("too many non-nesting splits for an exact canonical code");
  std::string best;
  for (std::size_t mask = 0; mask < (std::size_t{1} << twins.size()); ++mask) {
    std::map<CircleId, std::string> name{{kOuter, "O"}};
    auto nm = [&](const CircleId& c) { return name.at(c); };
    auto sorted_names = [&](const std::vector<CircleId>& cs) {
      std::vector<std::string> v;
      for (const auto& c : cs) v.push_back(nm(c));
      std::sort(v.begin(), v.end());
      std::string s = "{";
      for (const auto& x : v) s += x + ",";
      return s + "}";
    };
    NestingForest f;
    std::string code;
    std::size_t twin_no = 0;
    for (std::size_t i = 0; i < h.events.size(); ++i) {
      const Event& e = h.events[i];
      const std::string tag = std::to_string(i) + ".";
      code += std::string(event_tag(e.kind())) + "@" + format_value(e.time) + "(";
      std::visit(
          [&](const auto& ev) {
            using T = std::decay_t<decltype(ev)>;
            if constexpr (std::is_same_v<T, MinEvent>) {
              name[ev.created] = tag + "n";
              code += nm(ev.region);
            } else if constexpr (std::is_same_v<T, MaxEvent>) {
              code += nm(ev.circle);
            } else if constexpr (std::is_same_v<T, MergeNonNestingEvent>) {
              code += sorted_names({ev.a, ev.b});
              name[ev.created] = tag + "n";
            } else if constexpr (std::is_same_v<T, MergeNestingEvent>) {
              code += nm(ev.outer) + "," + nm(ev.inner);
              name[ev.created] = tag + "n";
            } else if constexpr (std::is_same_v<T, SplitNonNestingEvent>) {
              const bool swap = (mask >> twin_no++) & 1U;
              name[ev.first] = tag + (swap ? "b" : "a");
              name[ev.second] = tag + (swap ? "a" : "b");
              std::vector<CircleId> second_children;
              for (const auto& c : f.children(ev.circle)) {
                if (!contains(ev.first_children, c)) second_children.push_back(c);
              }
              std::string p1 = nm(ev.first) + sorted_names(ev.first_children);
              std::string p2 = nm(ev.second) + sorted_names(second_children);
              if (p2 < p1) std::swap(p1, p2);
              code += nm(ev.circle) + ";" + p1 + ";" + p2;
            } else {
              name[ev.outer] = tag + "o";
              name[ev.inner] = tag + "i";
              code += nm(ev.circle) + ";" + sorted_names(ev.inside);
            }
          },
          e.data);
      code += ")";
      f = apply_event(f, e);
    }
    if (mask == 0 || code < best) best = std::move(code);
  }
  return best;
}

bool poset_equivalent(const EmbeddingHistory& a, const EmbeddingHistory& b) {
  return a.events.size() == b.events.size() && history_code(a) == history_code(b);
}

// ---------------------------------------------------------------- combinatorial barcode

CombinatorialBarcode combinatorial_barcode(const EmbeddingHistory& h) {
  const Zigzag z = zigzag(h);
  struct Interval {
    std::size_t start;
    std::size_t end;
  };
  std::vector<Interval> intervals;
  std::map<CircleId, std::size_t> active;  // element at the current node -> interval
  CombinatorialBarcode out;
  for (const auto& e : z.nodes[0].poset.elements) {
    if (e == kOuter) continue;
    active[e] = intervals.size();
    intervals.push_back({0, 0});
  }
  for (const auto& a : z.arrows) {
    const std::size_t k = a.left;
    const auto& right = z.nodes[k + 1].poset;
    std::map<CircleId, std::size_t> next;
    // Pairs (element at node k, element at node k+1) linked by the arrow.
    std::vector<std::pair<CircleId, CircleId>> links;
    for (const auto& [s, t] : a.map) {
      if (a.direction == ArrowDirection::Forward) links.emplace_back(s, t);
      else links.emplace_back(t, s);
    }
    // Elder first: older intervals claim shared partners.
    std::sort(links.begin(), links.end(), [&](const auto& x, const auto& y) {
      auto ix = active.count(x.first) ? intervals[active.at(x.first)].start : k + 1;
      auto iy = active.count(y.first) ? intervals[active.at(y.first)].start : k + 1;
      return std::tie(ix, x) < std::tie(iy, y);
    });
    std::set<CircleId> continued;
    for (const auto& [l, r] : links) {
      if (l == kOuter) continue;
      auto it = active.find(l);
      if (it == active.end() || continued.count(l) || next.count(r)) {
        if (it != active.end() && next.count(r) && !continued.count(l)) {
          const auto& rival = intervals[next.at(r)];
          if (rival.start == intervals[it->second].start) out.decomposable = false;
        }
        continue;
      }
      next[r] = it->second;
      continued.insert(l);
    }
    for (const auto& [e, idx] : active) {
      if (!continued.count(e)) intervals[idx].end = k;
    }
    for (const auto& e : right.elements) {
      if (e == kOuter || next.count(e)) continue;
      next[e] = intervals.size();
      intervals.push_back({k + 1, 0});
    }
    active = std::move(next);
  }
  const std::size_t last = z.nodes.size() - 1;
  for (const auto& [e, idx] : active) intervals[idx].end = last;
  for (const auto& iv : intervals) {
    Bar bar;
    bar.dim = 0;
    if (iv.start == 0 || iv.start % 2 == 1) bar.birth = {z.nodes[iv.start].value, EndpointType::Closed};
    else bar.birth = {z.nodes[iv.start - 1].value, EndpointType::Open};
    if (iv.end == last) bar.death = std::nullopt;
    else if (iv.end % 2 == 1) bar.death = Endpoint{z.nodes[iv.end].value, EndpointType::Closed};
    else bar.death = Endpoint{z.nodes[iv.end + 1].value, EndpointType::Open};
    out.barcode.bars.push_back(bar);
  }
  out.barcode.flavor = BarcodeFlavor::Levelset;
  out.barcode.normalize();
  return out;
}

// ---------------------------------------------------------------- random histories

EmbeddingHistory random_history(std::mt19937_64& rng, std::size_t max_events) {
  if (max_events < 2) throw DomainError("a history needs at least two events");
  EmbeddingHistory h;
  NestingForest f;
  std::size_t counter = 0;
  double t = 0.0;
  auto fresh = [&] { return "c" + std::to_string(++counter); };
  auto pick = [&](const auto& v) { return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)]; };
  auto coin = [&] { return std::bernoulli_distribution(0.5)(rng); };
  auto subset = [&](const std::vector<CircleId>& v) {
    std::vector<CircleId> s;
    for (const auto& c : v) {
      if (coin()) s.push_back(c);
    }
    return s;
  };
  std::uniform_real_distribution<double> gap(0.25, 2.0);
  do {
    const auto circles = f.circles();
    // Each live circle needs at least one more event to disappear.
    const bool may_grow = h.events.size() + 1 + circles.size() + 1 <= max_events;
    std::vector<EventKind> options;
    if (may_grow) {
      options.push_back(EventKind::Min);
      if (!circles.empty()) {
        options.push_back(EventKind::SplitNonNesting);
        options.push_back(EventKind::SplitNesting);
      }
    }
    for (const auto& c : circles) {
      if (f.children(c).empty()) {
        options.push_back(EventKind::Max);
        break;
      }
    }
    for (const auto& c : circles) {
      if (!f.siblings(c).empty()) {
        options.push_back(EventKind::MergeNonNesting);
        break;
      }
    }
    for (const auto& c : circles) {
      if (f.parent(c) != kOuter) {
        options.push_back(EventKind::MergeNesting);
        break;
      }
    }
    Event e;
    t += gap(rng);
    e.time = std::round(t * 4.0) / 4.0 + static_cast<double>(h.events.size()) * 1e-3;
    switch (pick(options)) {
      case EventKind::Min: {
        std::vector<CircleId> regions{kOuter};
        for (const auto& c : circles) regions.push_back(c);
        e.data = MinEvent{pick(regions), fresh()};
        break;
      }
      case EventKind::Max: {
        std::vector<CircleId> leaves;
        for (const auto& c : circles) {
          if (f.children(c).empty()) leaves.push_back(c);
        }
        e.data = MaxEvent{pick(leaves)};
        break;
      }
      case EventKind::MergeNonNesting: {
        std::vector<CircleId> with_sibling;
        for (const auto& c : circles) {
          if (!f.siblings(c).empty()) with_sibling.push_back(c);
        }
        const CircleId a = pick(with_sibling);
        e.data = MergeNonNestingEvent{a, pick(f.siblings(a)), fresh()};
        break;
      }
      case EventKind::MergeNesting: {
        std::vector<CircleId> nested;
        for (const auto& c : circles) {
          if (f.parent(c) != kOuter) nested.push_back(c);
        }
        const CircleId i = pick(nested);
        e.data = MergeNestingEvent{f.parent(i), i, fresh()};
        break;
      }
      case EventKind::SplitNonNesting: {
        const CircleId c = pick(circles);
        const CircleId first = fresh();
        e.data = SplitNonNestingEvent{c, subset(f.children(c)), first, fresh()};
        break;
      }
      case EventKind::SplitNesting: {
        const CircleId c = pick(circles);
        const CircleId outer = fresh();
        e.data = SplitNestingEvent{c, subset(f.siblings(c)), outer, fresh()};
        break;
      }
    }
    f = apply_event(f, e);
    h.events.push_back(std::move(e));
  } while (!f.empty());
  return h;
}

}  // namespace msk
