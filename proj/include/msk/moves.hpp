#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "msk/core_complex.hpp"

namespace msk {

enum class MoveKind : std::uint8_t {
  FaceMax,
  FaceMin,
  EdgeMax,
  EdgeMin,
  VertexMax,
  VertexMin,
  CancelFaceMax,
  CancelFaceMin,
  CancelEdgeMax,
  CancelEdgeMin,
  CancelVertexMax,
  CancelVertexMin,
};

std::string_view to_string(MoveKind kind);
std::optional<MoveKind> parse_move_kind(std::string_view name);
bool is_cancellation(MoveKind kind);
/// The extremum type a move creates or removes.
MorseIndex extremum_of(MoveKind kind);

struct FaceSite {
  std::size_t face = 0;  // index into faces(g)
  friend bool operator==(const FaceSite&, const FaceSite&) = default;
};
struct EdgeSite {
  std::string edge;
  friend bool operator==(const EdgeSite&, const EdgeSite&) = default;
};
/// Gap k of a vertex lies between rotation[k] and rotation[k+1] (cyclically).
struct VertexSite {
  std::string vertex;
  std::size_t gap_a = 0;
  std::size_t gap_b = 0;
  friend bool operator==(const VertexSite&, const VertexSite&) = default;
};
struct CancelSite {
  std::string saddle;
  std::string extremum;  // the one that disappears
  friend bool operator==(const CancelSite&, const CancelSite&) = default;
};
using MoveSite = std::variant<FaceSite, EdgeSite, VertexSite, CancelSite>;

struct MoveInstance {
  MoveKind kind = MoveKind::FaceMax;
  MoveSite site;
  friend bool operator==(const MoveInstance&, const MoveInstance&) = default;
};

std::string describe(const MoveInstance& m);

/// Every applicable move on a valid graph, in a fixed order: face moves, edge
/// moves, vertex moves, then cancellations.
std::vector<MoveInstance> enumerate_moves(const MSGraph& g);

/// Additions only (the moves that grow the graph by two critical points).
std::vector<MoveInstance> enumerate_additions(const MSGraph& g);

/// Throws DomainError naming the failed pattern when the site does not match.
MSGraph apply_move(const MSGraph& g, const MoveInstance& m);

/**
 * Shortest move sequence turning g into a graph isomorphic to h, found by
 * bidirectional breadth-first search over canonical codes.  `max_vertices`
 * optionally caps the size of intermediate graphs.  The moves refer to the
 * graphs obtained by applying the prefix to g.
 */
std::optional<std::vector<MoveInstance>> connect(const MSGraph& g, const MSGraph& h, std::size_t max_depth,
                                                 std::optional<std::size_t> max_vertices = std::nullopt);

/// One representative per isomorphism class reachable from g by additions
/// while staying within n_max critical points, sorted by canonical code.
std::vector<MSGraph> census(const MSGraph& g, std::size_t n_max);
std::set<CanonicalCode> reachable_codes(const MSGraph& g, std::size_t n_max);

}  // namespace msk
