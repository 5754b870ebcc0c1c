#include "msk/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

#include "msk/errors.hpp"
#include "msk/io.hpp"
#include "msk/moves.hpp"
#include "msk/persistence.hpp"
#include "msk/realize_count.hpp"
#include "msk/slices.hpp"

namespace msk::cli {

namespace {

using io::json;

struct Globals {
  bool json = false;
  bool quiet = false;
  bool dot = false;
  std::uint64_t seed = 0;
};

enum class FileKind { Graph, History, Barcode };

FileKind kind_of(const json& j, const std::string& path) {
  if (j.is_object() && j.contains("vertices")) return FileKind::Graph;
  if (j.is_object() && j.contains("events")) return FileKind::History;
  if (j.is_object() && j.contains("bars")) return FileKind::Barcode;
  throw MalformedInput("'" + path + "' is not a graph, history or barcode file");
}

json load_kind(const std::string& path, FileKind want) {
  json j = io::load(path);
  if (kind_of(j, path) != want) {
    static const char* names[] = {"graph", "history", "barcode"};
    throw MalformedInput("'" + path + "' is not a " + names[static_cast<int>(want)] + " file");
  }
  return j;
}

MSGraph load_graph(const std::string& p) { return io::graph_from_json(load_kind(p, FileKind::Graph)); }
DecoratedMSGraph load_decorated(const std::string& p) { return io::decorated_from_json(load_kind(p, FileKind::Graph)); }
EmbeddingHistory load_history(const std::string& p) { return io::history_from_json(load_kind(p, FileKind::History)); }
Barcode load_barcode(const std::string& p) { return io::barcode_from_json(load_kind(p, FileKind::Barcode)); }

std::string height_graph_text(const HeightGraph& h) {
  std::ostringstream s;
  for (std::size_t i = 0; i < h.nodes.size(); ++i) {
    s << "node " << i << " " << h.nodes[i].label << " " << format_value(h.nodes[i].height) << "\n";
  }
  for (const auto& [a, b] : h.arcs) s << "arc " << a << " " << b << "\n";
  return s.str();
}

json height_graph_json(const HeightGraph& h) {
  json j;
  j["nodes"] = json::array();
  for (const auto& n : h.nodes) j["nodes"].push_back({{"label", n.label}, {"height", n.height}});
  j["arcs"] = json::array();
  for (const auto& [a, b] : h.arcs) j["arcs"].push_back({a, b});
  j["tree"] = h.is_tree();
  return j;
}

json poset_json(const NestingPoset& p) {
  json j;
  j["elements"] = p.elements;
  j["parent"] = p.parent;
  j["code"] = poset_code(p);
  return j;
}

std::string poset_text(const NestingPoset& p) {
  std::ostringstream s;
  s << poset_code(p) << "\n";
  for (std::size_t i = 1; i < p.size(); ++i) {
    s << p.elements[i] << " < " << p.elements[static_cast<std::size_t>(p.parent[i])] << "\n";
  }
  return s.str();
}

std::vector<double> parse_list(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw MalformedInput("expected a comma-separated list of numbers, got '" + s + "'");
    }
  }
  return out;
}

MoveInstance parse_move_arg(const MSGraph& g, const std::string& arg) {
  if (!arg.empty() && std::all_of(arg.begin(), arg.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    const auto moves = enumerate_moves(g);
    const std::size_t k = std::stoul(arg);
    if (k >= moves.size()) {
      throw DomainError("move index " + arg + " out of range (" + std::to_string(moves.size()) + " moves)");
    }
    return moves[k];
  }
  if (!arg.empty() && arg.front() == '{') return io::move_from_json(io::parse(arg));
  return io::move_from_json(io::load(arg));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& real_out, std::ostream& err) {
  CLI::App app{"Morse-Smale graphs, moves, persistence, nesting posets and embedding counts", "msk"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "machine-readable output");
  app.add_flag("--quiet", g.quiet, "print nothing; report through the exit code");
  app.add_flag("--dot", g.dot, "emit DOT where a drawing exists");
  app.add_option("--seed", g.seed, "seed for random generators");

  std::ostringstream buffer;
  std::ostream& out = buffer;
  std::function<int()> action;
  auto leaf = [&](CLI::App* sub, std::function<int()> f) { sub->callback([&action, f = std::move(f)] { action = f; }); };
  auto emit_json = [&](const json& j) { out << io::dump(j); };

  std::string path, path2, move_arg, slicing_arg;
  std::size_t max_depth = 12, n_max = 6, max_vertices = 0, max_events = 8, bars = 3;
  std::optional<std::size_t> max_bars;
  double at = 0.0;
  bool strict = false, rank = false, combinatorial = false;

  // validate
  auto* validate_cmd = app.add_subcommand("validate", "check the Morse-Smale invariants of a graph file");
  validate_cmd->add_option("graph", path, "graph file")->required();
  leaf(validate_cmd, [&] {
    const auto enc = io::graph_encoding_from_json(load_kind(path, FileKind::Graph));
    const auto rep = validate(enc);
    if (g.json) {
      json j;
      j["valid"] = rep.ok();
      j["structural_errors"] = rep.structural_errors;
      j["violations"] = json::array();
      for (const auto& v : rep.violations) j["violations"].push_back({{"kind", to_string(v.kind)}, {"detail", v.detail}});
      emit_json(j);
    } else if (rep.ok()) {
      out << "valid\n";
    }
    if (rep.ok()) return int{kOk};
    std::string why;
    for (const auto& s : rep.structural_errors) why += "invalid: " + s + "\n";
    for (const auto& v : rep.violations) why += "invalid: " + std::string(to_string(v.kind)) + ": " + v.detail + "\n";
    throw DomainError(why.substr(0, why.size() - 1));
  });

  // render
  auto* render_cmd = app.add_subcommand("render", "draw a graph, history or barcode as DOT");
  render_cmd->add_option("file", path, "graph, history or barcode file")->required();
  leaf(render_cmd, [&] {
    const json j = io::load(path);
    switch (kind_of(j, path)) {
      case FileKind::Graph: {
        const auto enc = io::graph_encoding_from_json(j);
        const MSGraph gr = from_encoding(enc);
        const bool valued = std::all_of(enc.vertices.begin(), enc.vertices.end(), [](const auto& v) { return v.value.has_value(); });
        if (valued) {
          const auto d = decorated_from_encoding(enc);
          out << io::to_dot(gr, &d.values);
        } else {
          out << io::to_dot(gr);
        }
        break;
      }
      case FileKind::History: out << to_dot(reeb_graph(io::history_from_json(j)), "reeb"); break;
      case FileKind::Barcode: out << to_dot(reeb_from_barcode(io::barcode_from_json(j)), "reeb"); break;
    }
    return int{kOk};
  });

  // moves
  auto* moves_cmd = app.add_subcommand("moves", "fundamental moves");
  moves_cmd->require_subcommand(1);
  auto* moves_enum = moves_cmd->add_subcommand("enum", "list applicable moves");
  moves_enum->add_option("graph", path)->required();
  leaf(moves_enum, [&] {
    const auto moves = enumerate_moves(load_graph(path));
    if (g.json) {
      json j = json::array();
      for (const auto& m : moves) j.push_back(io::to_json(m));
      emit_json(j);
    } else {
      for (std::size_t i = 0; i < moves.size(); ++i) out << i << " " << describe(moves[i]) << "\n";
    }
    return int{kOk};
  });
  auto* moves_apply = moves_cmd->add_subcommand("apply", "apply one move and print the new graph");
  moves_apply->add_option("graph", path)->required();
  moves_apply->add_option("--move", move_arg, "index from `moves enum`, inline JSON or a move file")->required();
  leaf(moves_apply, [&] {
    const MSGraph gr = load_graph(path);
    emit_json(io::to_json(apply_move(gr, parse_move_arg(gr, move_arg))));
    return int{kOk};
  });
  auto* moves_connect = moves_cmd->add_subcommand("connect", "shortest move sequence between two graphs");
  moves_connect->add_option("from", path)->required();
  moves_connect->add_option("to", path2)->required();
  moves_connect->add_option("--max-depth", max_depth, "longest sequence searched")->capture_default_str();
  moves_connect->add_option("--max-vertices", max_vertices, "cap on intermediate graph size (0: none)");
  leaf(moves_connect, [&] {
    const auto seq = connect(load_graph(path), load_graph(path2), max_depth,
                             max_vertices ? std::optional<std::size_t>(max_vertices) : std::nullopt);
    if (!seq) throw DomainError("no move sequence of length <= " + std::to_string(max_depth) + " found");
    if (g.json) {
      json j = json::array();
      for (const auto& m : *seq) j.push_back(io::to_json(m));
      emit_json(j);
    } else {
      out << seq->size() << " moves\n";
      for (const auto& m : *seq) out << describe(m) << "\n";
    }
    return int{kOk};
  });
  auto* moves_explore = moves_cmd->add_subcommand("explore", "isomorphism classes reachable by additions");
  moves_explore->add_option("graph", path)->required();
  moves_explore->add_option("--n-max", n_max, "largest number of critical points")->capture_default_str();
  leaf(moves_explore, [&] {
    const auto codes = reachable_codes(load_graph(path), n_max);
    if (g.json) {
      json j;
      j["count"] = codes.size();
      j["codes"] = json::array();
      for (const auto& c : codes) j["codes"].push_back(c.hex());
      emit_json(j);
    } else {
      out << codes.size() << " classes with at most " << n_max << " critical points\n";
    }
    return int{kOk};
  });

  // persist
  auto* persist_cmd = app.add_subcommand("persist", "persistence of decorated graphs");
  persist_cmd->require_subcommand(1);
  auto* persist_barcode = persist_cmd->add_subcommand("barcode", "sublevel barcode");
  persist_barcode->add_option("graph", path)->required();
  leaf(persist_barcode, [&] {
    const auto b = sublevel_barcode(load_decorated(path));
    if (g.json) emit_json(io::to_json(b));
    else out << to_string(b);
    return int{kOk};
  });
  auto height_leaf = [&](CLI::App* sub, std::function<HeightGraph(const json&)> make, std::string name) {
    sub->add_option("file", path)->required();
    leaf(sub, [&, make, name] {
      const HeightGraph h = make(io::load(path));
      if (g.dot) out << to_dot(h, name);
      else if (g.json) emit_json(height_graph_json(h));
      else out << height_graph_text(h);
      return int{kOk};
    });
  };
  height_leaf(persist_cmd->add_subcommand("reeb", "Reeb graph of a decorated graph or a history"),
              [&](const json& j) {
                if (kind_of(j, path) == FileKind::History) return reeb_graph(io::history_from_json(j));
                if (kind_of(j, path) != FileKind::Graph) throw MalformedInput("expected a graph or history file");
                return reeb_graph(io::decorated_from_json(j));
              },
              "reeb");
  height_leaf(persist_cmd->add_subcommand("merge-tree", "join tree of the sublevel sets"),
              [&](const json& j) {
                if (kind_of(j, path) != FileKind::Graph) throw MalformedInput("expected a graph file");
                return merge_tree(io::decorated_from_json(j));
              },
              "merge_tree");

  // equiv
  auto* equiv_cmd = app.add_subcommand("equiv", "equivalence checks");
  equiv_cmd->require_subcommand(1);
  auto verdict = [&](bool yes, const std::string& what) {
    if (g.json) emit_json({{what, yes}});
    else out << (yes ? "" : "not ") << what << "\n";
    return int{kOk};
  };
  auto* equiv_graph = equiv_cmd->add_subcommand("graph", "graph equivalence of decorated graphs");
  equiv_graph->add_option("a", path)->required();
  equiv_graph->add_option("b", path2)->required();
  equiv_graph->add_flag("--rank", rank, "compare value ranks instead of values");
  leaf(equiv_graph, [&] {
    return verdict(graph_equivalent(load_decorated(path), load_decorated(path2), rank ? ValueMatch::Rank : ValueMatch::Exact),
                   "graph-equivalent");
  });
  auto* equiv_hom = equiv_cmd->add_subcommand("homological", "equal Betti profiles");
  equiv_hom->add_option("a", path)->required();
  equiv_hom->add_option("b", path2)->required();
  leaf(equiv_hom, [&] {
    return verdict(homologically_equivalent(load_decorated(path), load_decorated(path2)), "homologically equivalent");
  });
  auto* equiv_poset = equiv_cmd->add_subcommand("poset", "poset equivalence of histories");
  equiv_poset->add_option("a", path)->required();
  equiv_poset->add_option("b", path2)->required();
  leaf(equiv_poset, [&] { return verdict(poset_equivalent(load_history(path), load_history(path2)), "poset-equivalent"); });

  // slices
  auto* slices_cmd = app.add_subcommand("slices", "nesting posets of embedding histories");
  slices_cmd->require_subcommand(1);
  auto* slices_poset = slices_cmd->add_subcommand("poset", "nesting poset at a height");
  slices_poset->add_option("history", path)->required();
  slices_poset->add_option("--at", at, "height")->required();
  leaf(slices_poset, [&] {
    const auto h = load_history(path);
    check_history(h);
    const auto p = nesting_poset_at(h, at);
    if (g.dot) out << hasse_dot(p);
    else if (g.json) emit_json(poset_json(p));
    else out << poset_text(p);
    return int{kOk};
  });
  auto* slices_zigzag = slices_cmd->add_subcommand("zigzag", "zigzag of nesting posets");
  slices_zigzag->add_option("history", path)->required();
  slices_zigzag->add_option("--slicing", slicing_arg, "a0,a1,...,an interleaving the event times");
  leaf(slices_zigzag, [&] {
    const auto h = load_history(path);
    const Zigzag z = slicing_arg.empty() ? zigzag(h) : zigzag(h, parse_list(slicing_arg));
    if (g.json) {
      json j;
      j["nodes"] = json::array();
      for (const auto& n : z.nodes) {
        j["nodes"].push_back({{"value", n.value}, {"critical", n.critical}, {"poset", poset_json(n.poset)}});
      }
      j["arrows"] = json::array();
      for (const auto& a : z.arrows) {
        json m = json::array();
        for (const auto& [x, y] : a.map) m.push_back({x, y});
        j["arrows"].push_back({{"left", a.left},
                               {"direction", a.direction == ArrowDirection::Forward ? "forward" : "backward"},
                               {"map", m},
                               {"injective", a.injective},
                               {"surjective", a.surjective},
                               {"order_preserving", a.order_preserving},
                               {"isomorphism", a.isomorphism}});
      }
      emit_json(j);
      return int{kOk};
    }
    for (std::size_t i = 0; i < z.nodes.size(); ++i) {
      const auto& n = z.nodes[i];
      out << (n.critical ? "t " : "a ") << format_value(n.value) << " " << poset_code(n.poset) << "\n";
      if (i < z.arrows.size()) {
        const auto& a = z.arrows[i];
        out << "  " << (a.direction == ArrowDirection::Forward ? "->" : "<-");
        if (a.isomorphism) out << " iso";
        else {
          if (a.injective) out << " injective";
          if (a.surjective) out << " surjective";
        }
        out << "\n";
      }
    }
    return int{kOk};
  });
  auto* slices_barcode = slices_cmd->add_subcommand("barcode", "level-set barcode of a history");
  slices_barcode->add_option("history", path)->required();
  slices_barcode->add_flag("--combinatorial", combinatorial, "experimental barcode read off the zigzag");
  leaf(slices_barcode, [&] {
    const auto h = load_history(path);
    if (combinatorial) {
      const auto cb = combinatorial_barcode(h);
      if (g.json) {
        json j = io::to_json(cb.barcode);
        j["decomposable"] = cb.decomposable;
        emit_json(j);
      } else {
        out << to_string(cb.barcode) << (cb.decomposable ? "" : "not decomposable\n");
      }
      return int{kOk};
    }
    const auto b = levelset_barcode(h);
    if (g.json) emit_json(io::to_json(b));
    else out << to_string(b);
    return int{kOk};
  });

  // count
  auto* count_cmd = app.add_subcommand("count", "embedding counts for level-set barcodes");
  count_cmd->require_subcommand(1);
  auto* count_lb = count_cmd->add_subcommand("lower-bound", "2^(N-1) times the product of nesting depths");
  count_lb->add_option("barcode", path)->required();
  leaf(count_lb, [&] {
    const auto b = load_barcode(path);
    check_barcode_input(b);
    const auto lb = lower_bound(b);
    if (g.json) emit_json({{"lower_bound", lb}});
    else out << lb << "\n";
    return int{kOk};
  });
  auto* count_enum = count_cmd->add_subcommand("enumerate", "all embedding classes realizing a barcode");
  count_enum->add_option("barcode", path)->required();
  count_enum->add_flag("--strict-endpoints", strict, "require endpoint types to match");
  count_enum->add_option("--max-bars", max_bars, "largest barcode accepted (default 8 or MSK_MAX_BARS)");
  leaf(count_enum, [&] {
    const auto b = load_barcode(path);
    EnumerateOptions opt;
    opt.mode = strict ? EndpointMode::Strict : EndpointMode::Insensitive;
    opt.max_bars = max_bars ? *max_bars : max_bars_from_env();
    const auto hs = enumerate_embeddings(b, opt);
    const auto lb = lower_bound(b);
    if (g.json) {
      json j;
      j["count"] = hs.size();
      j["lower_bound"] = lb;
      j["bound_respected"] = hs.size() >= lb;
      j["histories"] = json::array();
      for (const auto& h : hs) j["histories"].push_back(io::to_json(h));
      emit_json(j);
    } else {
      out << "count " << hs.size() << "\nlower_bound " << lb << "\nbound_respected "
          << (hs.size() >= lb ? "true" : "false") << "\n";
    }
    return int{kOk};
  });

  // realize
  auto* realize_cmd = app.add_subcommand("realize", "build Reeb graphs and histories from barcodes");
  realize_cmd->require_subcommand(1);
  auto* realize_check = realize_cmd->add_subcommand("check", "is the barcode realizable");
  realize_check->add_option("barcode", path)->required();
  leaf(realize_check, [&] {
    const auto r = is_realizable(load_barcode(path));
    if (g.json) emit_json({{"realizable", r.ok}, {"reason", r.reason}});
    else if (r.ok) out << "realizable\n";
    if (!r.ok) throw DomainError("not realizable: " + r.reason);
    return int{kOk};
  });
  auto* realize_reeb = realize_cmd->add_subcommand("reeb", "Reeb graph of a barcode");
  realize_reeb->add_option("barcode", path)->required();
  leaf(realize_reeb, [&] {
    const auto r = reeb_from_barcode(load_barcode(path));
    if (g.json) emit_json(height_graph_json(r));
    else if (g.dot) out << to_dot(r, "reeb");
    else out << height_graph_text(r);
    return int{kOk};
  });
  auto* realize_history = realize_cmd->add_subcommand("history", "default embedding history of a barcode");
  realize_history->add_option("barcode", path)->required();
  leaf(realize_history, [&] {
    emit_json(io::to_json(history_from_reeb(reeb_from_barcode(load_barcode(path)))));
    return int{kOk};
  });

  // generate
  auto* gen_cmd = app.add_subcommand("generate", "seeded random inputs");
  gen_cmd->require_subcommand(1);
  auto* gen_history = gen_cmd->add_subcommand("history", "random embedding history");
  gen_history->add_option("--max-events", max_events)->capture_default_str();
  leaf(gen_history, [&] {
    std::mt19937_64 rng(g.seed);
    emit_json(io::to_json(random_history(rng, max_events)));
    return int{kOk};
  });
  auto* gen_barcode = gen_cmd->add_subcommand("barcode", "random realizable level-set barcode");
  gen_barcode->add_option("--bars", bars)->capture_default_str();
  leaf(gen_barcode, [&] {
    std::mt19937_64 rng(g.seed);
    emit_json(io::to_json(random_realizable_barcode(rng, bars)));
    return int{kOk};
  });

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    real_out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    real_out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    std::size_t i = 0;
    while (i < args.size() && args[i].rfind("--", 0) == 0) i += args[i] == "--seed" ? 2 : 1;
    if (i < args.size() && !app.get_subcommand_no_throw(args[i])) {
      err << "error: unknown verb '" << args[i] << "'\n\n" << app.help("", CLI::AppFormatMode::All);
      return kMalformed;
    }
    err << "error: " << e.what() << "\n\n" << app.help("", CLI::AppFormatMode::All);
    return kMalformed;
  }
  if (!action) {
    err << app.help("", CLI::AppFormatMode::All);
    return kMalformed;
  }
  int code = kOk;
  try {
    code = action();
  } catch (const MalformedInput& e) {
    err << "malformed input: " << e.what() << "\n";
    return kMalformed;
  } catch (const DomainError& e) {
    err << e.what() << "\n";
    if (g.json && buffer.str().empty()) real_out << io::dump({{"error", e.what()}});
    else if (!g.quiet) real_out << buffer.str();
    return kRejected;
  }
  if (!g.quiet) real_out << buffer.str();
  return code;
}

}  // namespace msk::cli
