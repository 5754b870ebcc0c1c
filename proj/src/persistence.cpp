#include "msk/persistence.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

#include "msk/errors.hpp"

namespace msk {

std::string format_value(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

// ---------------------------------------------------------------- barcodes

double Bar::length() const {
  return death ? death->value - birth.value : std::numeric_limits<double>::infinity();
}

namespace {

auto bar_key(const Bar& b) {
  const double dv = b.death ? b.death->value : std::numeric_limits<double>::infinity();
  const int dt = b.death ? static_cast<int>(b.death->type) : 2;
  return std::make_tuple(b.dim, b.birth.value, static_cast<int>(b.birth.type), dv, dt);
}

auto loose_key(const Bar& b) {
  const double dv = b.death ? b.death->value : std::numeric_limits<double>::infinity();
  return std::make_tuple(b.dim, b.birth.value, dv, b.essential());
}

}  // namespace

void Barcode::normalize() {
  std::sort(bars.begin(), bars.end(), [](const Bar& a, const Bar& b) { return bar_key(a) < bar_key(b); });
}

std::vector<Bar> Barcode::in_dim(int dim) const {
  std::vector<Bar> out;
  for (const auto& b : bars) {
    if (b.dim == dim) out.push_back(b);
  }
  return out;
}

bool barcodes_equal(const Barcode& a, const Barcode& b, EndpointMode mode) {
  if (a.bars.size() != b.bars.size()) return false;
  if (mode == EndpointMode::Strict) {
    std::vector<decltype(bar_key(a.bars[0]))> ka, kb;
    for (const auto& x : a.bars) ka.push_back(bar_key(x));
    for (const auto& x : b.bars) kb.push_back(bar_key(x));
    std::sort(ka.begin(), ka.end());
    std::sort(kb.begin(), kb.end());
    return ka == kb;
  }
  std::vector<decltype(loose_key(a.bars[0]))> ka, kb;
  for (const auto& x : a.bars) ka.push_back(loose_key(x));
  for (const auto& x : b.bars) kb.push_back(loose_key(x));
  std::sort(ka.begin(), ka.end());
  std::sort(kb.begin(), kb.end());
  return ka == kb;
}

std::string to_string(const Bar& bar) {
  std::string s = bar.birth.type == EndpointType::Closed ? "[" : "(";
  s += format_value(bar.birth.value) + ",";
  if (!bar.death) return s + "inf)";
  return s + format_value(bar.death->value) + (bar.death->type == EndpointType::Closed ? "]" : ")");
}

std::string to_string(const Barcode& b) {
  std::map<int, std::vector<std::string>> by_dim;
  for (const auto& bar : b.bars) by_dim[bar.dim].push_back(to_string(bar));
  std::string s;
  for (const auto& [dim, bars] : by_dim) {
    s += "H" + std::to_string(dim) + ":";
    for (const auto& t : bars) s += " " + t;
    s += "\n";
  }
  return s;
}

// ---------------------------------------------------------------- reduction

Pairing reduce_boundary(std::vector<std::vector<std::size_t>> columns) {
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  const std::size_t n = columns.size();
  std::vector<std::size_t> owner(n, none);  // row -> column whose lowest entry it is
  std::vector<bool> paired(n, false);
  Pairing out;
  std::vector<std::size_t> scratch;
  for (std::size_t j = 0; j < n; ++j) {
    auto& col = columns[j];
    std::sort(col.begin(), col.end());
    // Z/2: an entry listed twice cancels.
    std::vector<std::size_t> clean;
    for (std::size_t i = 0; i < col.size();) {
      std::size_t k = i;
      while (k < col.size() && col[k] == col[i]) ++k;
      if ((k - i) % 2 == 1) clean.push_back(col[i]);
      i = k;
    }
    col.swap(clean);
    while (!col.empty() && owner[col.back()] != none) {
      const auto& other = columns[owner[col.back()]];
      scratch.clear();
      std::set_symmetric_difference(col.begin(), col.end(), other.begin(), other.end(), std::back_inserter(scratch));
      col.swap(scratch);
    }
    if (!col.empty()) {
      owner[col.back()] = j;
      paired[col.back()] = paired[j] = true;
      out.pairs.emplace_back(col.back(), j);
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (!paired[j]) out.unpaired.push_back(j);
  }
  std::sort(out.pairs.begin(), out.pairs.end());
  return out;
}

// ---------------------------------------------------------------- decorated graphs

DecoratedMSGraph decorate(MSGraph g, std::vector<double> values) {
  auto rep = validate(g);
  if (!rep.ok()) {
    throw DomainError("graph is not a valid Morse-Smale graph: " + std::string(to_string(rep.violations.front().kind)) +
                      " (" + rep.violations.front().detail + ")");
  }
  if (values.size() != g.vertex_count()) throw DomainError("need one value per vertex");
  for (double v : values) {
    if (!std::isfinite(v)) throw DomainError("values must be finite");
  }
  std::vector<double> sorted = values;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw DomainError("values must be distinct");
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    std::size_t s = g.dart_vertex(2 * e), x = g.dart_vertex(2 * e + 1);
    if (g.index(s) != MorseIndex::Saddle) std::swap(s, x);
    const bool up = g.index(x) == MorseIndex::Maximum;
    if (up ? !(values[x] > values[s]) : !(values[x] < values[s])) {
      throw DomainError("values must increase from minimum to saddle to maximum along edge '" + g.edge_id(e) + "'");
    }
  }
  return DecoratedMSGraph{std::move(g), std::move(values)};
}

DecoratedMSGraph decorated_from_encoding(const GraphEncoding& enc) {
  std::vector<double> values;
  for (const auto& v : enc.vertices) {
    if (!v.value) throw MalformedInput("vertex '" + v.id + "' has no value");
    values.push_back(*v.value);
  }
  return decorate(from_encoding(enc), std::move(values));
}

Barcode sublevel_barcode(const DecoratedMSGraph& dg) {
  const MSGraph& g = dg.graph;
  Barcode out;
  out.flavor = BarcodeFlavor::Sublevel;
  if (g.edge_count() == 0) {
    // Base sphere: the disk bounded by a point has no cells to reduce.
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      const int dim = g.index(v) == MorseIndex::Minimum ? 0 : 2;
      out.bars.push_back({dim, {dg.value(v), EndpointType::Closed}, std::nullopt});
    }
    out.normalize();
    return out;
  }
  struct Cell {
    int dim;
    double value;
    std::vector<std::size_t> boundary;  // cell ids
  };
  std::vector<Cell> cells;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) cells.push_back({0, dg.value(v), {}});
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    std::size_t a = g.dart_vertex(2 * e), b = g.dart_vertex(2 * e + 1);
    cells.push_back({1, std::max(dg.value(a), dg.value(b)), {a, b}});
  }
  for (const auto& f : faces(g)) {
    Cell c{2, -std::numeric_limits<double>::infinity(), {}};
    for (std::size_t k = 0; k < f.darts.size(); ++k) {
      c.value = std::max(c.value, dg.value(f.corners[k]));
      c.boundary.push_back(g.vertex_count() + MSGraph::edge_of(f.darts[k]));
    }
    cells.push_back(std::move(c));
  }
  std::vector<std::size_t> order(cells.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return std::tie(cells[x].value, cells[x].dim) < std::tie(cells[y].value, cells[y].dim);
  });
  std::vector<std::size_t> pos(cells.size());
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
  std::vector<std::vector<std::size_t>> cols(cells.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (auto c : cells[order[i]].boundary) cols[i].push_back(pos[c]);
  }
  Pairing p = reduce_boundary(std::move(cols));
  for (auto [b, d] : p.pairs) {
    const Cell& cb = cells[order[b]];
    const Cell& cd = cells[order[d]];
    if (cb.value == cd.value) continue;
    out.bars.push_back({cb.dim, {cb.value, EndpointType::Closed}, Endpoint{cd.value, EndpointType::Open}});
  }
  for (auto u : p.unpaired) {
    const Cell& c = cells[order[u]];
    out.bars.push_back({c.dim, {c.value, EndpointType::Closed}, std::nullopt});
  }
  out.normalize();
  return out;
}

// ---------------------------------------------------------------- height graphs

std::size_t HeightGraph::up_degree(std::size_t n) const {
  return static_cast<std::size_t>(std::count_if(arcs.begin(), arcs.end(), [&](const auto& a) { return a.first == n; }));
}

std::size_t HeightGraph::down_degree(std::size_t n) const {
  return static_cast<std::size_t>(std::count_if(arcs.begin(), arcs.end(), [&](const auto& a) { return a.second == n; }));
}

bool HeightGraph::is_tree() const {
  if (nodes.empty() || arcs.size() + 1 != nodes.size()) return false;
  std::vector<std::size_t> parent(nodes.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [a, b] : arcs) {
    std::size_t ra = find(a), rb = find(b);
    if (ra == rb) return false;
    parent[ra] = rb;
  }
  return true;
}

bool height_isomorphic(const HeightGraph& a, const HeightGraph& b) {
  if (a.nodes.size() != b.nodes.size() || a.arcs.size() != b.arcs.size()) return false;
  auto heights = [](const HeightGraph& h) {
    std::vector<double> hs;
    for (const auto& n : h.nodes) hs.push_back(n.height);
    std::sort(hs.begin(), hs.end());
    return hs;
  };
  auto arc_heights = [](const HeightGraph& h) {
    std::vector<std::pair<double, double>> as;
    for (auto [lo, hi] : h.arcs) as.emplace_back(h.nodes[lo].height, h.nodes[hi].height);
    std::sort(as.begin(), as.end());
    return as;
  };
  return heights(a) == heights(b) && arc_heights(a) == arc_heights(b);
}

std::string to_dot(const HeightGraph& h, const std::string& name) {
  std::ostringstream out;
  out << "graph " << name << " {\n  rankdir=BT;\n";
  for (std::size_t n = 0; n < h.nodes.size(); ++n) {
    out << "  n" << n << " [label=\"" << h.nodes[n].label << " (" << format_value(h.nodes[n].height) << ")\"];\n";
  }
  for (auto [lo, hi] : h.arcs) out << "  n" << lo << " -- n" << hi << ";\n";
  out << "}\n";
  return out.str();
}

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
};

std::vector<std::size_t> by_value(const DecoratedMSGraph& dg) {
  std::vector<std::size_t> order(dg.graph.vertex_count());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return dg.value(a) < dg.value(b); });
  return order;
}

std::vector<std::size_t> neighbours(const MSGraph& g, std::size_t v) {
  std::vector<std::size_t> out;
  for (auto d : g.rotation(v)) out.push_back(g.other_end(d));
  return out;
}

HeightGraph::Node node_of(const DecoratedMSGraph& dg, std::size_t v) {
  return {dg.graph.vertex(v).id, dg.value(v)};
}

// Augmented join tree over vertices in the given order: arcs (earlier head, v)
// for every distinct earlier component adjacent to v.
std::vector<std::pair<std::size_t, std::size_t>> sweep_tree(const DecoratedMSGraph& dg,
                                                            const std::vector<std::size_t>& order) {
  const std::size_t n = dg.graph.vertex_count();
  std::vector<std::size_t> rank(n);
  for (std::size_t i = 0; i < n; ++i) rank[order[i]] = i;
  UnionFind uf(n);
  std::vector<std::size_t> head(n);
  std::vector<std::pair<std::size_t, std::size_t>> arcs;
  for (std::size_t v : order) {
    std::set<std::size_t> comps;
    for (auto u : neighbours(dg.graph, v)) {
      if (rank[u] < rank[v]) comps.insert(uf.find(u));
    }
    for (auto c : comps) {
      arcs.emplace_back(head[c], v);
      uf.parent[c] = v;
    }
    head[v] = v;
  }
  return arcs;
}

}  // namespace

HeightGraph merge_tree(const DecoratedMSGraph& dg) {
  const MSGraph& g = dg.graph;
  HeightGraph t;
  auto order = by_value(dg);
  if (g.edge_count() == 0) {
    for (auto v : order) t.nodes.push_back(node_of(dg, v));
    if (t.nodes.size() == 2) t.arcs.emplace_back(0, 1);
    return t;
  }
  UnionFind uf(g.vertex_count());
  std::vector<std::size_t> head(g.vertex_count(), 0);
  std::vector<bool> done(g.vertex_count(), false);
  for (std::size_t v : order) {
    std::set<std::size_t> comps;
    for (auto u : neighbours(g, v)) {
      if (done[u]) comps.insert(uf.find(u));
    }
    done[v] = true;
    if (comps.size() == 1) {
      uf.parent[v] = *comps.begin();
      continue;
    }
    const std::size_t node = t.nodes.size();
    t.nodes.push_back(node_of(dg, v));
    for (auto c : comps) {
      t.arcs.emplace_back(head[c], node);
      uf.parent[c] = v;
    }
    head[v] = node;
  }
  // Root at the global maximum.
  const std::size_t top = order.back();
  const std::size_t root = uf.find(top);
  if (t.nodes.back().label != g.vertex(top).id) {
    t.nodes.push_back(node_of(dg, top));
    t.arcs.emplace_back(head[root], t.nodes.size() - 1);
  }
  return t;
}

HeightGraph reeb_graph(const DecoratedMSGraph& dg) {
  const MSGraph& g = dg.graph;
  const std::size_t n = g.vertex_count();
  HeightGraph r;
  for (std::size_t v = 0; v < n; ++v) r.nodes.push_back(node_of(dg, v));
  if (g.edge_count() == 0) {
    auto order = by_value(dg);
    if (n == 2) r.arcs.emplace_back(order[0], order[1]);
    return r;
  }
  auto asc = by_value(dg);
  auto desc = asc;
  std::reverse(desc.begin(), desc.end());
  // Join tree (sublevel sweep): arcs (lower, upper).  Split tree (superlevel
  // sweep): arcs (upper, lower) as produced, flipped below.
  std::vector<std::set<std::size_t>> jt_up(n), jt_down(n), st_up(n), st_down(n);
  for (auto [lo, hi] : sweep_tree(dg, asc)) {
    jt_up[lo].insert(hi);
    jt_down[hi].insert(lo);
  }
  for (auto [hi, lo] : sweep_tree(dg, desc)) {
    st_up[lo].insert(hi);
    st_down[hi].insert(lo);
  }
  auto upper_leaf = [&](std::size_t x) { return st_up[x].empty() && jt_down[x].size() == 1; };
  auto lower_leaf = [&](std::size_t x) { return jt_down[x].empty() && st_up[x].size() == 1; };
  auto splice_out = [](std::vector<std::set<std::size_t>>& up, std::vector<std::set<std::size_t>>& down,
                       std::size_t x) {
    for (auto d : down[x]) {
      up[d].erase(x);
      for (auto u : up[x]) up[d].insert(u);
    }
    for (auto u : up[x]) {
      down[u].erase(x);
      for (auto d : down[x]) down[u].insert(d);
    }
    up[x].clear();
    down[x].clear();
  };
  std::vector<bool> alive(n, true);
  std::size_t remaining = n;
  std::set<std::size_t> queue;
  for (std::size_t v = 0; v < n; ++v) {
    if (upper_leaf(v) || lower_leaf(v)) queue.insert(v);
  }
  while (remaining > 1 && !queue.empty()) {
    std::size_t x = *queue.begin();
    queue.erase(queue.begin());
    if (!alive[x]) continue;
    std::size_t y;
    if (upper_leaf(x)) {
      y = *st_down[x].begin();
      r.arcs.emplace_back(y, x);
    } else if (lower_leaf(x)) {
      y = *jt_up[x].begin();
      r.arcs.emplace_back(x, y);
    } else {
      continue;
    }
    std::set<std::size_t> touched;
    for (const auto* adj : {&jt_up[x], &jt_down[x], &st_up[x], &st_down[x]}) touched.insert(adj->begin(), adj->end());
    splice_out(jt_up, jt_down, x);
    splice_out(st_down, st_up, x);
    alive[x] = false;
    --remaining;
    for (auto t : touched) {
      if (alive[t] && (upper_leaf(t) || lower_leaf(t))) queue.insert(t);
    }
  }
  std::sort(r.arcs.begin(), r.arcs.end());
  return r;
}

Barcode levelset_barcode(const HeightGraph& reeb) {
  // Cells: ascending vertices and arcs, then cone edges (w*v) and cone
  // triangles (w*arc) in decreasing height.  w itself is left out, which
  // computes reduced homology of the cone.
  enum Type { AscVertex, AscArc, ConeEdge, ConeTri };
  struct Cell {
    Type type;
    std::size_t item;
    double value;
    int dim;
  };
  const auto& nodes = reeb.nodes;
  std::vector<Cell> asc, cone;
  for (std::size_t v = 0; v < nodes.size(); ++v) {
    asc.push_back({AscVertex, v, nodes[v].height, 0});
    cone.push_back({ConeEdge, v, nodes[v].height, 1});
  }
  for (std::size_t a = 0; a < reeb.arcs.size(); ++a) {
    auto [lo, hi] = reeb.arcs[a];
    asc.push_back({AscArc, a, std::max(nodes[lo].height, nodes[hi].height), 1});
    cone.push_back({ConeTri, a, std::min(nodes[lo].height, nodes[hi].height), 2});
  }
  std::stable_sort(asc.begin(), asc.end(),
                   [](const Cell& x, const Cell& y) { return std::tie(x.value, x.dim) < std::tie(y.value, y.dim); });
  std::stable_sort(cone.begin(), cone.end(), [](const Cell& x, const Cell& y) {
    return std::make_tuple(-x.value, x.dim) < std::make_tuple(-y.value, y.dim);
  });
  std::vector<Cell> cells = asc;
  cells.insert(cells.end(), cone.begin(), cone.end());
  std::vector<std::size_t> pos_vertex(nodes.size()), pos_arc(reeb.arcs.size()), pos_cone_edge(nodes.size());
  for (std::size_t i = 0; i < cells.size(); ++i) {
    switch (cells[i].type) {
      case AscVertex: pos_vertex[cells[i].item] = i; break;
      case AscArc: pos_arc[cells[i].item] = i; break;
      case ConeEdge: pos_cone_edge[cells[i].item] = i; break;
      case ConeTri: break;
    }
  }
  std::vector<std::vector<std::size_t>> cols(cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const Cell& c = cells[i];
    if (c.type == AscArc) {
      auto [lo, hi] = reeb.arcs[c.item];
      cols[i] = {pos_vertex[lo], pos_vertex[hi]};
    } else if (c.type == ConeEdge) {
      cols[i] = {pos_vertex[c.item]};
    } else if (c.type == ConeTri) {
      auto [lo, hi] = reeb.arcs[c.item];
      cols[i] = {pos_arc[c.item], pos_cone_edge[lo], pos_cone_edge[hi]};
    }
  }
  Pairing p = reduce_boundary(std::move(cols));
  Barcode out;
  out.flavor = BarcodeFlavor::Levelset;
  for (auto [bi, di] : p.pairs) {
    const Cell& b = cells[bi];
    const Cell& d = cells[di];
    if (b.value == d.value) continue;
    Bar bar;
    bar.dim = 0;
    if (b.type == AscVertex && d.type == AscArc) {
      bar.birth = {b.value, EndpointType::Closed};
      bar.death = Endpoint{d.value, EndpointType::Open};
    } else if (b.type == AscVertex && d.type == ConeEdge) {
      bar.birth = {b.value, EndpointType::Closed};
      bar.death = Endpoint{d.value, EndpointType::Closed};
    } else if (b.type == AscArc && d.type == ConeTri) {
      bar.birth = {d.value, EndpointType::Open};
      bar.death = Endpoint{b.value, EndpointType::Open};
    } else if (b.type == ConeEdge && d.type == ConeTri) {
      bar.birth = {d.value, EndpointType::Open};
      bar.death = Endpoint{b.value, EndpointType::Closed};
    } else {
      continue;
    }
    out.bars.push_back(bar);
  }
  out.normalize();
  return out;
}

// ---------------------------------------------------------------- equivalences

bool graph_equivalent(const DecoratedMSGraph& a, const DecoratedMSGraph& b, ValueMatch match) {
  const MSGraph& ga = a.graph;
  const MSGraph& gb = b.graph;
  if (ga.vertex_count() != gb.vertex_count() || ga.edge_count() != gb.edge_count()) return false;
  auto keys = [&](const DecoratedMSGraph& dg) {
    std::vector<double> k = dg.values;
    if (match == ValueMatch::Rank) {
      auto order = by_value(dg);
      for (std::size_t r = 0; r < order.size(); ++r) k[order[r]] = static_cast<double>(r);
    }
    return k;
  };
  const auto ka = keys(a), kb = keys(b);
  auto labelled = [](const MSGraph& g, const std::vector<double>& k) {
    std::vector<std::pair<double, int>> vs;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) vs.emplace_back(k[v], static_cast<int>(g.index(v)));
    std::sort(vs.begin(), vs.end());
    std::vector<std::pair<double, double>> es;
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      double x = k[g.dart_vertex(2 * e)], y = k[g.dart_vertex(2 * e + 1)];
      es.emplace_back(std::min(x, y), std::max(x, y));
    }
    std::sort(es.begin(), es.end());
    return std::make_pair(vs, es);
  };
  return labelled(ga, ka) == labelled(gb, kb);
}

std::vector<double> critical_values(const DecoratedMSGraph& g) {
  std::vector<double> c = g.values;
  std::sort(c.begin(), c.end());
  return c;
}

std::vector<double> canonical_slicing(const DecoratedMSGraph& g) {
  auto c = critical_values(g);
  std::vector<double> a;
  a.push_back(c.front() - 1.0);
  for (std::size_t i = 1; i < c.size(); ++i) a.push_back((c[i - 1] + c[i]) / 2.0);
  a.push_back(c.back() + 1.0);
  return a;
}

bool is_slicing(const std::vector<double>& critical, const std::vector<double>& slicing) {
  if (slicing.size() != critical.size() + 1) return false;
  for (std::size_t i = 0; i < critical.size(); ++i) {
    if (!(slicing[i] < critical[i] && critical[i] < slicing[i + 1])) return false;
  }
  return true;
}

std::vector<BettiNumbers> betti_profile(const DecoratedMSGraph& g, const std::vector<double>& slicing) {
  if (!is_slicing(critical_values(g), slicing)) {
    throw DomainError("slicing must interleave the critical values: a0 < c1 < a1 < ... < cn < an");
  }
  const Barcode b = sublevel_barcode(g);
  std::vector<BettiNumbers> out;
  for (double a : slicing) {
    BettiNumbers bn;
    for (const auto& bar : b.bars) {
      if (bar.birth.value > a || (bar.death && bar.death->value <= a)) continue;
      (bar.dim == 0 ? bn.b0 : bar.dim == 1 ? bn.b1 : bn.b2) += 1;
    }
    out.push_back(bn);
  }
  return out;
}

bool homologically_equivalent(const DecoratedMSGraph& a, const DecoratedMSGraph& b) {
  if (a.graph.vertex_count() != b.graph.vertex_count()) return false;
  return betti_profile(a, canonical_slicing(a)) == betti_profile(b, canonical_slicing(b));
}

}  // namespace msk
