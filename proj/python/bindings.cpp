// Python bindings.  Files cross the boundary as plain dicts in the same
// JSON shapes the command-line tool reads and writes.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "msk/errors.hpp"
#include "msk/io.hpp"
#include "msk/moves.hpp"
#include "msk/persistence.hpp"
#include "msk/realize_count.hpp"
#include "msk/slices.hpp"

namespace py = pybind11;
using msk::io::json;

namespace {

json to_json(const py::object& o) {
  auto text = py::module_::import("json").attr("dumps")(o).cast<std::string>();
  return msk::io::parse(text);
}

py::object from_json(const json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

py::list bars_list(const msk::Barcode& b) { return from_json(msk::io::to_json(b)["bars"]); }

msk::EnumerateOptions options(bool strict) {
  msk::EnumerateOptions opt;
  opt.mode = strict ? msk::EndpointMode::Strict : msk::EndpointMode::Insensitive;
  opt.max_bars = msk::max_bars_from_env();
  return opt;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Morse-Smale graphs on the sphere";

  py::register_exception<msk::MalformedInput>(m, "MalformedInput", PyExc_ValueError);
  py::register_exception<msk::DomainError>(m, "DomainError", PyExc_ValueError);

  m.def("validate", [](const py::object& graph) {
    const auto rep = msk::validate(msk::io::graph_encoding_from_json(to_json(graph)));
    py::list issues;
    for (const auto& s : rep.structural_errors) issues.append(s);
    for (const auto& v : rep.violations) issues.append(std::string(msk::to_string(v.kind)) + ": " + v.detail);
    return issues;
  }, "List of problems; empty for a valid Morse-Smale graph.");

  m.def("face_count", [](const py::object& graph) { return msk::faces(msk::io::graph_from_json(to_json(graph))).size(); });
  m.def("euler_characteristic", [](const py::object& graph) {
    return msk::euler_characteristic(msk::io::graph_from_json(to_json(graph)));
  });
  m.def("canonical_code", [](const py::object& graph) {
    return msk::canonical_code(msk::io::graph_from_json(to_json(graph))).hex();
  });
  m.def("base_sphere", [] { return from_json(msk::io::to_json(msk::MSGraph::base_sphere())); });

  m.def("enumerate_moves", [](const py::object& graph) {
    py::list out;
    for (const auto& mv : msk::enumerate_moves(msk::io::graph_from_json(to_json(graph)))) out.append(from_json(msk::io::to_json(mv)));
    return out;
  });
  m.def("apply_move", [](const py::object& graph, const py::object& move) {
    const auto g = msk::io::graph_from_json(to_json(graph));
    return from_json(msk::io::to_json(msk::apply_move(g, msk::io::move_from_json(to_json(move)))));
  });
  m.def("connect", [](const py::object& a, const py::object& b, std::size_t max_depth, std::optional<std::size_t> max_vertices) -> py::object {
    const auto seq = msk::connect(msk::io::graph_from_json(to_json(a)), msk::io::graph_from_json(to_json(b)), max_depth, max_vertices);
    if (!seq) return py::none();
    py::list out;
    for (const auto& mv : *seq) out.append(from_json(msk::io::to_json(mv)));
    return out;
  }, py::arg("a"), py::arg("b"), py::arg("max_depth") = 12, py::arg("max_vertices") = py::none());
  m.def("census_size", [](std::size_t n_max) { return msk::reachable_codes(msk::MSGraph::base_sphere(), n_max).size(); });

  m.def("sublevel_barcode", [](const py::object& graph) {
    return from_json(msk::io::to_json(msk::sublevel_barcode(msk::io::decorated_from_json(to_json(graph)))));
  });
  m.def("graph_equivalent", [](const py::object& a, const py::object& b) {
    return msk::graph_equivalent(msk::io::decorated_from_json(to_json(a)), msk::io::decorated_from_json(to_json(b)));
  });
  m.def("homologically_equivalent", [](const py::object& a, const py::object& b) {
    return msk::homologically_equivalent(msk::io::decorated_from_json(to_json(a)), msk::io::decorated_from_json(to_json(b)));
  });

  m.def("levelset_barcode", [](const py::object& history) {
    return from_json(msk::io::to_json(msk::levelset_barcode(msk::io::history_from_json(to_json(history)))));
  });
  m.def("poset_at", [](const py::object& history, double value) {
    return msk::poset_code(msk::nesting_poset_at(msk::io::history_from_json(to_json(history)), value));
  }, "Canonical code of the nesting poset at a height.");
  m.def("poset_equivalent", [](const py::object& a, const py::object& b) {
    return msk::poset_equivalent(msk::io::history_from_json(to_json(a)), msk::io::history_from_json(to_json(b)));
  });
  m.def("barcodes_equal", [](const py::object& a, const py::object& b, bool strict) {
    return msk::barcodes_equal(msk::io::barcode_from_json(to_json(a)), msk::io::barcode_from_json(to_json(b)),
                               strict ? msk::EndpointMode::Strict : msk::EndpointMode::Insensitive);
  }, py::arg("a"), py::arg("b"), py::arg("strict") = false);

  m.def("lower_bound", [](const py::object& barcode) { return msk::lower_bound(msk::io::barcode_from_json(to_json(barcode))); });
  m.def("is_realizable", [](const py::object& barcode) {
    const auto r = msk::is_realizable(msk::io::barcode_from_json(to_json(barcode)));
    return py::make_tuple(r.ok, r.reason);
  });
  m.def("enumerate_embeddings", [](const py::object& barcode, bool strict) {
    py::list out;
    for (const auto& h : msk::enumerate_embeddings(msk::io::barcode_from_json(to_json(barcode)), options(strict))) {
      out.append(from_json(msk::io::to_json(h)));
    }
    return out;
  }, py::arg("barcode"), py::arg("strict") = false);
  m.def("history_from_barcode", [](const py::object& barcode) {
    return from_json(msk::io::to_json(msk::history_from_reeb(msk::reeb_from_barcode(msk::io::barcode_from_json(to_json(barcode))))));
  });
  m.def("reeb_dot", [](const py::object& barcode) {
    return msk::to_dot(msk::reeb_from_barcode(msk::io::barcode_from_json(to_json(barcode))), "reeb");
  });
}
