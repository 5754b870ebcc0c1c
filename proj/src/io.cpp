#include "msk/io.hpp"

#include <fstream>
#include <sstream>

#include "msk/errors.hpp"

namespace msk::io {

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw MalformedInput(std::string("invalid JSON: ") + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MalformedInput("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json load(const std::string& path) { return parse(read_file(path)); }

std::string dump(const json& j) { return j.dump(2) + "\n"; }

namespace {

const json& field(const json& j, const char* key, const char* where) {
  if (!j.is_object() || !j.contains(key)) throw MalformedInput(std::string(where) + ": missing \"" + key + "\"");
  return j.at(key);
}

std::string text(const json& j, const char* where) {
  if (!j.is_string()) throw MalformedInput(std::string(where) + ": expected a string");
  return j.get<std::string>();
}

double number(const json& j, const char* where) {
  if (!j.is_number()) throw MalformedInput(std::string(where) + ": expected a number");
  return j.get<double>();
}

std::size_t count_of(const json& j, const char* where) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    throw MalformedInput(std::string(where) + ": expected a non-negative integer");
  }
  return j.get<std::size_t>();
}

std::vector<std::string> texts(const json& j, const char* where) {
  if (!j.is_array()) throw MalformedInput(std::string(where) + ": expected an array");
  std::vector<std::string> out;
  for (const auto& x : j) out.push_back(text(x, where));
  return out;
}

Endpoint endpoint_from_json(const json& j) {
  Endpoint e;
  e.value = number(field(j, "v", "endpoint"), "endpoint value");
  const std::string t = text(field(j, "t", "endpoint"), "endpoint type");
  if (t == "closed") e.type = EndpointType::Closed;
  else if (t == "open") e.type = EndpointType::Open;
  else throw MalformedInput("endpoint type must be \"closed\" or \"open\", got \"" + t + "\"");
  return e;
}

json to_json(const Endpoint& e) { return json{{"v", e.value}, {"t", e.type == EndpointType::Closed ? "closed" : "open"}}; }

}  // namespace

GraphEncoding graph_encoding_from_json(const json& j) {
  GraphEncoding enc;
  const auto& vs = field(j, "vertices", "graph");
  if (!vs.is_array()) throw MalformedInput("graph: \"vertices\" must be an array");
  for (const auto& v : vs) {
    GraphEncoding::Vertex rec;
    rec.id = text(field(v, "id", "vertex"), "vertex id");
    const auto& idx = field(v, "index", "vertex");
    if (!idx.is_number_integer()) throw MalformedInput("vertex '" + rec.id + "': index must be an integer");
    rec.index = idx.get<int>();
    if (v.contains("value") && !v.at("value").is_null()) {
      if (!v.at("value").is_number()) throw MalformedInput("vertex '" + rec.id + "': value must be a number");
      rec.value = v.at("value").get<double>();
    }
    enc.vertices.push_back(std::move(rec));
  }
  const auto& rots = field(j, "rotations", "graph");
  if (!rots.is_object()) throw MalformedInput("graph: \"rotations\" must be an object");
  for (const auto& [vid, darts] : rots.items()) {
    if (!darts.is_array()) throw MalformedInput("rotation of '" + vid + "' must be an array");
    std::vector<std::string> ds;
    for (const auto& d : darts) ds.push_back(text(d, "rotation entry"));
    enc.rotations.emplace_back(vid, std::move(ds));
  }
  const auto& darts = field(j, "darts", "graph");
  if (!darts.is_object()) throw MalformedInput("graph: \"darts\" must be an object");
  for (const auto& [did, rec] : darts.items()) {
    enc.darts.emplace_back(did, text(field(rec, "edge", "dart"), "dart edge"));
  }
  const auto& edges = field(j, "edges", "graph");
  if (!edges.is_object()) throw MalformedInput("graph: \"edges\" must be an object");
  for (const auto& [eid, rec] : edges.items()) {
    GraphEncoding::Edge e;
    e.id = eid;
    const auto& ends = field(rec, "ends", "edge");
    if (!ends.is_array()) throw MalformedInput("edge '" + eid + "': ends must be an array");
    for (const auto& d : ends) e.ends.push_back(text(d, "edge end"));
    if (rec.contains("kind")) e.kind = text(rec.at("kind"), "edge kind");
    enc.edges.push_back(std::move(e));
  }
  return enc;
}

json to_json(const GraphEncoding& enc) {
  json j;
  j["vertices"] = json::array();
  for (const auto& v : enc.vertices) {
    json jv{{"id", v.id}, {"index", v.index}};
    if (v.value) jv["value"] = *v.value;
    j["vertices"].push_back(std::move(jv));
  }
  j["rotations"] = json::object();
  for (const auto& [v, darts] : enc.rotations) j["rotations"][v] = darts;
  j["darts"] = json::object();
  for (const auto& [d, e] : enc.darts) j["darts"][d] = json{{"edge", e}};
  j["edges"] = json::object();
  for (const auto& e : enc.edges) {
    json je{{"ends", e.ends}};
    if (e.kind) je["kind"] = *e.kind;
    j["edges"][e.id] = std::move(je);
  }
  return j;
}

json to_json(const MSGraph& g) { return to_json(to_encoding(g)); }

MSGraph graph_from_json(const json& j) { return from_encoding(graph_encoding_from_json(j)); }

DecoratedMSGraph decorated_from_json(const json& j) { return decorated_from_encoding(graph_encoding_from_json(j)); }

Barcode barcode_from_json(const json& j) {
  Barcode b;
  const std::string flavor = text(field(j, "flavor", "barcode"), "barcode flavor");
  if (flavor == "sublevel") b.flavor = BarcodeFlavor::Sublevel;
  else if (flavor == "levelset") b.flavor = BarcodeFlavor::Levelset;
  else throw MalformedInput("barcode flavor must be \"sublevel\" or \"levelset\", got \"" + flavor + "\"");
  const auto& bars = field(j, "bars", "barcode");
  if (!bars.is_array()) throw MalformedInput("barcode: \"bars\" must be an array");
  for (const auto& jb : bars) {
    Bar bar;
    const auto& dim = field(jb, "dim", "bar");
    if (!dim.is_number_integer()) throw MalformedInput("bar: dim must be an integer");
    bar.dim = dim.get<int>();
    bar.birth = endpoint_from_json(field(jb, "birth", "bar"));
    const auto& death = field(jb, "death", "bar");
    if (death.is_string()) {
      if (death.get<std::string>() != "inf") throw MalformedInput("bar: death must be an endpoint or \"inf\"");
    } else {
      bar.death = endpoint_from_json(death);
    }
    b.bars.push_back(bar);
  }
  return b;
}

json to_json(const Barcode& b) {
  json j;
  j["flavor"] = b.flavor == BarcodeFlavor::Sublevel ? "sublevel" : "levelset";
  j["bars"] = json::array();
  for (const auto& bar : b.bars) {
    json jb{{"dim", bar.dim}, {"birth", to_json(bar.birth)}};
    jb["death"] = bar.death ? to_json(*bar.death) : json("inf");
    j["bars"].push_back(std::move(jb));
  }
  return j;
}

EmbeddingHistory history_from_json(const json& j) {
  EmbeddingHistory h;
  const auto& events = field(j, "events", "history");
  if (!events.is_array()) throw MalformedInput("history: \"events\" must be an array");
  for (const auto& je : events) {
    Event e;
    e.time = number(field(je, "t", "event"), "event time");
    const std::string tag = text(field(je, "kind", "event"), "event kind");
    const auto kind = parse_event_tag(tag);
    if (!kind) throw MalformedInput("unknown event kind \"" + tag + "\"");
    const auto& a = field(je, "args", "event");
    auto arg = [&](const char* key) { return text(field(a, key, tag.c_str()), key); };
    switch (*kind) {
      case EventKind::Min: e.data = MinEvent{arg("region"), arg("new")}; break;
      case EventKind::Max: e.data = MaxEvent{arg("circle")}; break;
      case EventKind::MergeNonNesting: e.data = MergeNonNestingEvent{arg("a"), arg("b"), arg("new")}; break;
      case EventKind::MergeNesting: e.data = MergeNestingEvent{arg("outer"), arg("inner"), arg("new")}; break;
      case EventKind::SplitNonNesting:
        e.data = SplitNonNestingEvent{arg("circle"), texts(field(a, "first_children", tag.c_str()), "first_children"),
                                      arg("first"), arg("second")};
        break;
      case EventKind::SplitNesting:
        e.data = SplitNestingEvent{arg("circle"), texts(field(a, "inside", tag.c_str()), "inside"), arg("outer"),
                                   arg("inner")};
        break;
    }
    h.events.push_back(std::move(e));
  }
  return h;
}

json to_json(const EmbeddingHistory& h) {
  json j;
  j["events"] = json::array();
  for (const auto& e : h.events) {
    json args = std::visit(
        [](const auto& ev) -> json {
          using T = std::decay_t<decltype(ev)>;
          if constexpr (std::is_same_v<T, MinEvent>) return {{"region", ev.region}, {"new", ev.created}};
          else if constexpr (std::is_same_v<T, MaxEvent>) return {{"circle", ev.circle}};
          else if constexpr (std::is_same_v<T, MergeNonNestingEvent>) return {{"a", ev.a}, {"b", ev.b}, {"new", ev.created}};
          else if constexpr (std::is_same_v<T, MergeNestingEvent>)
            return {{"outer", ev.outer}, {"inner", ev.inner}, {"new", ev.created}};
          else if constexpr (std::is_same_v<T, SplitNonNestingEvent>)
            return {{"circle", ev.circle}, {"first", ev.first}, {"second", ev.second}, {"first_children", ev.first_children}};
          else return {{"circle", ev.circle}, {"outer", ev.outer}, {"inner", ev.inner}, {"inside", ev.inside}};
        },
        e.data);
    j["events"].push_back(json{{"t", e.time}, {"kind", std::string(event_tag(e.kind()))}, {"args", std::move(args)}});
  }
  return j;
}

MoveInstance move_from_json(const json& j) {
  MoveInstance m;
  const std::string name = text(field(j, "kind", "move"), "move kind");
  const auto kind = parse_move_kind(name);
  if (!kind) throw MalformedInput("unknown move kind \"" + name + "\"");
  m.kind = *kind;
  const auto& site = field(j, "site", "move");
  if (is_cancellation(m.kind)) {
    m.site = CancelSite{text(field(site, "saddle", "site"), "saddle"), text(field(site, "extremum", "site"), "extremum")};
  } else if (m.kind == MoveKind::FaceMax || m.kind == MoveKind::FaceMin) {
    m.site = FaceSite{count_of(field(site, "face", "site"), "face")};
  } else if (m.kind == MoveKind::EdgeMax || m.kind == MoveKind::EdgeMin) {
    m.site = EdgeSite{text(field(site, "edge", "site"), "edge")};
  } else {
    const auto& gaps = field(site, "gaps", "site");
    if (!gaps.is_array() || gaps.size() != 2) throw MalformedInput("site: gaps must be a pair");
    m.site = VertexSite{text(field(site, "vertex", "site"), "vertex"), count_of(gaps[0], "gap"), count_of(gaps[1], "gap")};
  }
  return m;
}

json to_json(const MoveInstance& m) {
  json site = std::visit(
      [](const auto& s) -> json {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, FaceSite>) return {{"face", s.face}};
        else if constexpr (std::is_same_v<T, EdgeSite>) return {{"edge", s.edge}};
        else if constexpr (std::is_same_v<T, VertexSite>) return {{"vertex", s.vertex}, {"gaps", {s.gap_a, s.gap_b}}};
        else return {{"saddle", s.saddle}, {"extremum", s.extremum}};
      },
      m.site);
  return json{{"kind", std::string(to_string(m.kind))}, {"site", std::move(site)}};
}

std::string to_dot(const MSGraph& g, const std::vector<double>* values) {
  std::ostringstream out;
  out << "graph ms {\n";
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const char* shape = g.index(v) == MorseIndex::Minimum ? "circle" : g.index(v) == MorseIndex::Saddle ? "diamond" : "square";
    out << "  \"" << g.vertex(v).id << "\" [shape=" << shape;
    if (values) out << ", label=\"" << g.vertex(v).id << " (" << (*values)[v] << ")\"";
    out << "];\n";
  }
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    out << "  \"" << g.vertex(g.dart_vertex(2 * e)).id << "\" -- \"" << g.vertex(g.dart_vertex(2 * e + 1)).id
        << "\" [style=" << (g.edge_kind(e) == EdgeKind::SaddleMax ? "solid" : "dashed") << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace msk::io
