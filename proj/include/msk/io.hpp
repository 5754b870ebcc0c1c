#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "msk/core_complex.hpp"
#include "msk/moves.hpp"
#include "msk/persistence.hpp"
#include "msk/slices.hpp"

// JSON and DOT formats.  Decoding failures throw MalformedInput; output is
// deterministic (ordered keys, fixed number formatting).
namespace msk::io {

using json = nlohmann::ordered_json;

json parse(std::string_view text);
std::string read_file(const std::string& path);
json load(const std::string& path);
std::string dump(const json& j);

GraphEncoding graph_encoding_from_json(const json& j);
json to_json(const GraphEncoding& enc);
json to_json(const MSGraph& g);
MSGraph graph_from_json(const json& j);

/// A graph file whose vertices all carry values.
DecoratedMSGraph decorated_from_json(const json& j);

/// {"flavor": "sublevel"|"levelset", "bars": [{"dim", "birth": {"v", "t"}, "death": {...}|"inf"}]}
Barcode barcode_from_json(const json& j);
json to_json(const Barcode& b);

/// {"events": [{"t", "kind", "args": {...}}]}
EmbeddingHistory history_from_json(const json& j);
json to_json(const EmbeddingHistory& h);

/// {"kind", "site": {"face"} | {"edge"} | {"vertex", "gaps"} | {"saddle", "extremum"}}
MoveInstance move_from_json(const json& j);
json to_json(const MoveInstance& m);

/// DOT drawing: solid lines for saddle-max edges, dashed for saddle-min.
std::string to_dot(const MSGraph& g, const std::vector<double>* values = nullptr);

}  // namespace msk::io
