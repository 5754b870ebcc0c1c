#include "msk/realize_count.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <set>

#include "msk/errors.hpp"

namespace msk {

std::size_t max_bars_from_env() {
  if (const char* s = std::getenv("MSK_MAX_BARS")) {
    char* end = nullptr;
    const long v = std::strtol(s, &end, 10);
    if (end != s && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultMaxBars;
}

namespace {

bool closed(const Endpoint& e) { return e.type == EndpointType::Closed; }

/// Strict containment by value.
bool strictly_inside(const Bar& inner, const Bar& outer) {
  const double ob = outer.birth.value;
  const double id = inner.death ? inner.death->value : INFINITY;
  const double od = outer.death ? outer.death->value : INFINITY;
  const bool le = ob <= inner.birth.value && id <= od;
  const bool differs = ob != inner.birth.value || id != od;
  return le && differs;
}

}  // namespace

void check_barcode_input(const Barcode& b) {
  if (b.bars.empty()) throw DomainError("barcode has no bars");
  std::set<double> seen;
  for (const auto& bar : b.bars) {
    if (!std::isfinite(bar.birth.value)) throw DomainError("bar endpoints must be finite");
    if (!seen.insert(bar.birth.value).second) throw DomainError("endpoint values must be distinct");
    if (bar.death) {
      if (!std::isfinite(bar.death->value)) throw DomainError("bar endpoints must be finite");
      if (!(bar.birth.value < bar.death->value)) throw DomainError("bar " + to_string(bar) + " is empty");
      if (!seen.insert(bar.death->value).second) throw DomainError("endpoint values must be distinct");
    } else if (b.flavor == BarcodeFlavor::Levelset) {
      throw DomainError("level-set bars must be finite");
    }
  }
}

std::size_t mu(const Barcode& b, std::size_t j) {
  if (j >= b.bars.size()) throw DomainError("bar index " + std::to_string(j) + " out of range");
  std::size_t n = 0;
  for (std::size_t k = 0; k < b.bars.size(); ++k) {
    if (k != j && strictly_inside(b.bars[j], b.bars[k])) ++n;
  }
  return n;
}

std::vector<Bar> bars_by_length(const Barcode& b) {
  std::vector<Bar> bars = b.bars;
  std::stable_sort(bars.begin(), bars.end(), [](const Bar& x, const Bar& y) {
    if (x.length() != y.length()) return x.length() > y.length();
    return x.birth.value < y.birth.value;
  });
  return bars;
}

std::uint64_t lower_bound(const Barcode& b) {
  if (b.bars.empty()) throw DomainError("barcode has no bars");
  Barcode sorted{b.flavor, bars_by_length(b)};
  std::uint64_t r = std::uint64_t{1} << (sorted.bars.size() - 1);
  for (std::size_t j = 1; j < sorted.bars.size(); ++j) r *= mu(sorted, j);
  return r;
}

Realizability is_realizable(const Barcode& b) {
  try {
    check_barcode_input(b);
  } catch (const DomainError& e) {
    return {false, e.what()};
  }
  const auto bars = bars_by_length(b);
  const Bar& top = bars.front();
  if (b.flavor == BarcodeFlavor::Sublevel) {
    for (const auto& bar : bars) {
      if (!closed(bar.birth)) return {false, "open bar forbidden in sublevel flavor"};
    }
    for (std::size_t i = 1; i < bars.size(); ++i) {
      if (bars[i].death && closed(*bars[i].death)) {
        return {false, "closed bar " + to_string(bars[i]) + " nested in another bar is forbidden in sublevel flavor"};
      }
    }
    std::vector<Bar> dim0;
    for (const auto& bar : bars) {
      if (bar.dim == 0) dim0.push_back(bar);
    }
    if (dim0.empty()) return {false, "no dimension-0 bar"};
    std::size_t essential = 0;
    for (const auto& bar : dim0) essential += bar.essential() ? 1 : 0;
    if (essential > 1) return {false, "more than one essential bar"};
    for (std::size_t i = 1; i < dim0.size(); ++i) {
      if (!strictly_inside(dim0[i], dim0[0])) return {false, "no single containing bar"};
    }
    return {true, ""};
  }
  for (const auto& bar : bars) {
    if (bar.dim != 0) return {false, "level-set barcodes have dimension-0 bars only"};
  }
  if (!closed(top.birth) || !closed(*top.death)) return {false, "no single containing closed bar"};
  for (std::size_t i = 1; i < bars.size(); ++i) {
    if (!strictly_inside(bars[i], top)) return {false, "no single containing closed bar"};
    if (closed(bars[i].birth) && closed(*bars[i].death)) {
      return {false, "closed bar " + to_string(bars[i]) + " inside the containing closed bar would be a separate sphere"};
    }
  }
  return {true, ""};
}

namespace {

void require_realizable(const Barcode& b) {
  if (b.flavor != BarcodeFlavor::Levelset) throw DomainError("expected a level-set barcode");
  const auto r = is_realizable(b);
  if (!r.ok) throw DomainError("barcode is not realizable: " + r.reason);
}

// One endpoint of the sweep.
struct Stop {
  double value;
  std::size_t bar;
  bool birth;
  bool closed;
};

struct Sweep {
  const Barcode& target;
  EndpointMode mode;
  std::vector<Stop> stops;
  std::map<std::string, EmbeddingHistory> found;

  struct State {
    NestingForest forest;
    std::map<CircleId, std::size_t> label;  // circle -> bar it carries
    std::vector<Event> events;
    std::size_t counter = 0;

    CircleId fresh() { return "c" + std::to_string(++counter); }
    CircleId circle_of(std::size_t bar) const {
      for (const auto& [c, k] : label) {
        if (k == bar) return c;
      }
      throw DomainError("internal: bar has no circle");
    }
  };

  void run(State s, std::size_t i) {
    if (i == stops.size()) {
      finish(s);
      return;
    }
    const Stop& st = stops[i];
    auto step = [&](EventData data, std::map<CircleId, std::size_t> relabel, std::vector<CircleId> drop, State base) {
      Event e{st.value, std::move(data)};
      base.forest = apply_event(base.forest, e);
      for (const auto& c : drop) base.label.erase(c);
      for (const auto& [c, k] : relabel) base.label[c] = k;
      base.events.push_back(std::move(e));
      run(std::move(base), i + 1);
    };
    const auto circles = s.forest.circles();
    if (st.birth && st.closed) {
      std::vector<CircleId> regions{kOuter};
      regions.insert(regions.end(), circles.begin(), circles.end());
      for (const auto& r : regions) {
        State n = s;
        const CircleId c = n.fresh();
        step(MinEvent{r, c}, {{c, st.bar}}, {}, std::move(n));
      }
    } else if (st.birth) {
      for (const auto& c : circles) {
        const std::size_t carried = s.label.at(c);
        const auto kids = s.forest.children(c);
        for (std::size_t mask = 0; mask < (std::size_t{1} << kids.size()); ++mask) {
          std::vector<CircleId> first_children;
          for (std::size_t k = 0; k < kids.size(); ++k) {
            if ((mask >> k) & 1U) first_children.push_back(kids[k]);
          }
          State n = s;
          const CircleId a = n.fresh(), b = n.fresh();
          step(SplitNonNestingEvent{c, first_children, a, b}, {{a, st.bar}, {b, carried}}, {c}, std::move(n));
        }
        const auto sibs = s.forest.siblings(c);
        for (std::size_t mask = 0; mask < (std::size_t{1} << sibs.size()); ++mask) {
          std::vector<CircleId> inside;
          for (std::size_t k = 0; k < sibs.size(); ++k) {
            if ((mask >> k) & 1U) inside.push_back(sibs[k]);
          }
          for (bool inner_new : {false, true}) {
            State n = s;
            const CircleId o = n.fresh(), in = n.fresh();
            std::map<CircleId, std::size_t> rl = inner_new ? std::map<CircleId, std::size_t>{{in, st.bar}, {o, carried}}
                                                           : std::map<CircleId, std::size_t>{{o, st.bar}, {in, carried}};
            step(SplitNestingEvent{c, inside, o, in}, rl, {c}, std::move(n));
          }
        }
      }
    } else if (st.closed) {
      const CircleId c = s.circle_of(st.bar);
      if (!s.forest.children(c).empty()) return;
      step(MaxEvent{c}, {}, {c}, s);
    } else {
      const CircleId c = s.circle_of(st.bar);
      for (const auto& sib : s.forest.siblings(c)) {
        State n = s;
        const CircleId m = n.fresh();
        step(MergeNonNestingEvent{c, sib, m}, {{m, s.label.at(sib)}}, {c, sib}, std::move(n));
      }
      const CircleId p = s.forest.parent(c);
      if (p != kOuter) {
        State n = s;
        const CircleId m = n.fresh();
        step(MergeNestingEvent{p, c, m}, {{m, s.label.at(p)}}, {p, c}, std::move(n));
      }
      for (const auto& ch : s.forest.children(c)) {
        State n = s;
        const CircleId m = n.fresh();
        step(MergeNestingEvent{c, ch, m}, {{m, s.label.at(ch)}}, {c, ch}, std::move(n));
      }
    }
  }

  void finish(const State& s) {
    EmbeddingHistory h{s.events};
    if (!barcodes_equal(levelset_barcode(h), target, mode)) return;
    auto code = history_code(h);
    found.emplace(std::move(code), std::move(h));
  }
};

}  // namespace

std::vector<EmbeddingHistory> enumerate_embeddings(const Barcode& b, const EnumerateOptions& opt) {
  require_realizable(b);
  if (b.bars.size() > opt.max_bars) {
    throw DomainError("barcode has " + std::to_string(b.bars.size()) + " bars; the enumeration cap is " +
                      std::to_string(opt.max_bars) + " (raise it with --max-bars or MSK_MAX_BARS)");
  }
  Barcode target = b;
  target.normalize();
  Sweep sw{target, opt.mode, {}, {}};
  for (std::size_t k = 0; k < target.bars.size(); ++k) {
    const Bar& bar = target.bars[k];
    sw.stops.push_back({bar.birth.value, k, true, closed(bar.birth)});
    sw.stops.push_back({bar.death->value, k, false, closed(*bar.death)});
  }
  std::sort(sw.stops.begin(), sw.stops.end(), [](const Stop& x, const Stop& y) { return x.value < y.value; });
  sw.run({}, 0);
  std::vector<EmbeddingHistory> out;
  for (auto& [code, h] : sw.found) out.push_back(std::move(h));
  return out;
}

ClassCount count_classes(const Barcode& b, const EnumerateOptions& opt) {
  ClassCount c;
  c.count = enumerate_embeddings(b, opt).size();
  c.lower_bound = lower_bound(b);
  c.bound_respected = c.count >= c.lower_bound;
  return c;
}

HeightGraph reeb_from_barcode(const Barcode& b) {
  require_realizable(b);
  const auto bars = bars_by_length(b);
  HeightGraph r;
  std::vector<std::vector<std::size_t>> chain(bars.size());  // nodes along each bar's branch
  auto node = [&](const std::string& kind, double h) {
    r.nodes.push_back({kind, h});
    return r.nodes.size() - 1;
  };
  chain[0] = {node("min", bars[0].birth.value), node("max", bars[0].death->value)};
  for (std::size_t j = 1; j < bars.size(); ++j) {
    std::size_t parent = 0;
    for (std::size_t k = 1; k < j; ++k) {
      if (strictly_inside(bars[j], bars[k])) parent = k;  // later = shorter
    }
    const Bar& bar = bars[j];
    std::size_t lo, hi;
    if (closed(bar.birth)) {
      lo = node("min", bar.birth.value);
    } else {
      lo = node("split", bar.birth.value);
      chain[parent].push_back(lo);
    }
    if (closed(*bar.death)) {
      hi = node("max", bar.death->value);
    } else {
      hi = node("merge", bar.death->value);
      chain[parent].push_back(hi);
    }
    chain[j] = {lo, hi};
  }
  for (auto& c : chain) {
    std::sort(c.begin(), c.end(), [&](std::size_t x, std::size_t y) { return r.nodes[x].height < r.nodes[y].height; });
    for (std::size_t i = 0; i + 1 < c.size(); ++i) r.arcs.emplace_back(c[i], c[i + 1]);
  }
  return r;
}

EmbeddingHistory history_from_reeb(const HeightGraph& r) {
  std::vector<std::size_t> order(r.nodes.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return r.nodes[x].height < r.nodes[y].height; });
  for (std::size_t i = 0; i + 1 < order.size(); ++i) {
    if (r.nodes[order[i]].height == r.nodes[order[i + 1]].height) throw DomainError("Reeb graph node heights must be distinct");
  }
  std::vector<std::vector<std::size_t>> down(r.nodes.size()), up(r.nodes.size());
  for (std::size_t a = 0; a < r.arcs.size(); ++a) {
    auto [lo, hi] = r.arcs[a];
    if (!(r.nodes[lo].height < r.nodes[hi].height)) throw DomainError("Reeb graph arcs must go upward");
    up[lo].push_back(a);
    down[hi].push_back(a);
  }
  EmbeddingHistory h;
  std::map<std::size_t, CircleId> circle;  // arc -> circle tracing it
  std::size_t counter = 0;
  auto fresh = [&] { return "c" + std::to_string(++counter); };
  for (std::size_t v : order) {
    const double t = r.nodes[v].height;
    const auto& d = down[v];
    const auto& u = up[v];
    if (d.empty() && u.size() == 1) {
      circle[u[0]] = fresh();
      h.events.push_back({t, MinEvent{kOuter, circle[u[0]]}});
    } else if (d.size() == 1 && u.empty()) {
      h.events.push_back({t, MaxEvent{circle.at(d[0])}});
    } else if (d.size() == 2 && u.size() == 1) {
      circle[u[0]] = fresh();
      h.events.push_back({t, MergeNonNestingEvent{circle.at(d[0]), circle.at(d[1]), circle[u[0]]}});
    } else if (d.size() == 1 && u.size() == 2) {
      circle[u[0]] = fresh();
      circle[u[1]] = fresh();
      h.events.push_back({t, SplitNonNestingEvent{circle.at(d[0]), {}, circle[u[0]], circle[u[1]]}});
    } else if (d.size() == 1 && u.size() == 1) {
      circle[u[0]] = circle.at(d[0]);  // regular point
    } else {
      throw DomainError("Reeb node " + r.nodes[v].label + " is not a simple critical point");
    }
  }
  check_history(h);
  return h;
}

Barcode random_realizable_barcode(std::mt19937_64& rng, std::size_t n) {
  if (n == 0) throw DomainError("need at least one bar");
  std::uniform_real_distribution<double> gap(0.5, 2.0);
  std::vector<double> values;
  double t = 0.0;
  for (std::size_t i = 0; i < 2 * n; ++i) {
    values.push_back(std::round(t * 4.0) / 4.0);
    t += gap(rng);
  }
  Barcode b;
  b.flavor = BarcodeFlavor::Levelset;
  b.bars.push_back({0, {values.front(), EndpointType::Closed}, Endpoint{values.back(), EndpointType::Closed}});
  std::vector<double> inner(values.begin() + 1, values.end() - 1);
  std::shuffle(inner.begin(), inner.end(), rng);
  std::uniform_int_distribution<int> type(0, 2);
  for (std::size_t i = 0; i + 1 < inner.size(); i += 2) {
    const double lo = std::min(inner[i], inner[i + 1]);
    const double hi = std::max(inner[i], inner[i + 1]);
    const int k = type(rng);
    const EndpointType bt = k == 0 ? EndpointType::Closed : EndpointType::Open;
    const EndpointType dt = k == 1 ? EndpointType::Closed : EndpointType::Open;
    b.bars.push_back({0, {lo, bt}, Endpoint{hi, dt}});
  }
  b.normalize();
  return b;
}

}  // namespace msk
