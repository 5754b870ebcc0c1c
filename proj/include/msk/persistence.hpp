#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "msk/core_complex.hpp"

namespace msk {

/// Shortest round-trip decimal form, used by every text output.
std::string format_value(double v);

// ---------------------------------------------------------------- barcodes

enum class EndpointType : std::uint8_t { Closed, Open };

struct Endpoint {
  double value = 0.0;
  EndpointType type = EndpointType::Closed;
  friend bool operator==(const Endpoint&, const Endpoint&) = default;
};

/// A bar; `death` is empty for bars that live forever.
struct Bar {
  int dim = 0;
  Endpoint birth;
  std::optional<Endpoint> death;

  bool essential() const { return !death.has_value(); }
  /// Infinite for essential bars.
  double length() const;
  friend bool operator==(const Bar&, const Bar&) = default;
};

enum class BarcodeFlavor : std::uint8_t { Sublevel, Levelset };
enum class EndpointMode : std::uint8_t { Insensitive, Strict };

struct Barcode {
  BarcodeFlavor flavor = BarcodeFlavor::Sublevel;
  std::vector<Bar> bars;

  /// Sorts bars by (dim, birth, death); called by every producer.
  void normalize();
  std::vector<Bar> in_dim(int dim) const;
};

/// Multiset equality of bars.  Insensitive mode compares endpoint values only.
bool barcodes_equal(const Barcode& a, const Barcode& b, EndpointMode mode = EndpointMode::Insensitive);

std::string to_string(const Bar& bar);
std::string to_string(const Barcode& b);

// ---------------------------------------------------------------- reduction

/// Result of reducing a Z/2 boundary matrix given column by column in
/// filtration order; rows of a column are indices of earlier columns.
struct Pairing {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // (birth column, death column)
  std::vector<std::size_t> unpaired;
};

Pairing reduce_boundary(std::vector<std::vector<std::size_t>> columns);

// ---------------------------------------------------------------- decorated graphs

struct DecoratedMSGraph {
  MSGraph graph;
  std::vector<double> values;  // one per vertex

  double value(std::size_t v) const { return values[v]; }
};

/// Checks that g is valid and the values are finite, pairwise distinct and
/// increase along every edge from minimum to saddle to maximum.
DecoratedMSGraph decorate(MSGraph g, std::vector<double> values);
/// Requires a value on every vertex.
DecoratedMSGraph decorated_from_encoding(const GraphEncoding& enc);

Barcode sublevel_barcode(const DecoratedMSGraph& g);

/// A graph drawn against a height function; arcs go (lower node, upper node).
/// Used for merge trees and Reeb graphs.
struct HeightGraph {
  struct Node {
    std::string label;
    double height = 0.0;
  };
  std::vector<Node> nodes;
  std::vector<std::pair<std::size_t, std::size_t>> arcs;

  std::size_t up_degree(std::size_t n) const;
  std::size_t down_degree(std::size_t n) const;
  bool is_tree() const;
};

/// Isomorphism preserving heights.  Node heights are assumed distinct, which
/// makes the bijection forced.
bool height_isomorphic(const HeightGraph& a, const HeightGraph& b);

std::string to_dot(const HeightGraph& h, const std::string& name = "reeb");

/// Join tree of the sublevel filtration: leaves at minima, internal nodes at
/// merging saddles, root at the global maximum.
HeightGraph merge_tree(const DecoratedMSGraph& g);

/// Contour tree of the function (the Reeb graph; a tree on the sphere), with
/// every critical point as a node.
HeightGraph reeb_graph(const DecoratedMSGraph& g);

/**
 * Level-set (zigzag) H0 barcode of a Reeb graph via extended persistence:
 * ordinary pairs give [min, merge), the essential class [gmin, gmax],
 * relative pairs (split, max] and extended pairs (split, merge).
 */
Barcode levelset_barcode(const HeightGraph& reeb);

enum class ValueMatch : std::uint8_t { Exact, Rank };

/// Graph isomorphism with f = g o phi.  The bijection is forced by the values
/// (ranks in Rank mode); rotations are ignored.
bool graph_equivalent(const DecoratedMSGraph& a, const DecoratedMSGraph& b, ValueMatch match = ValueMatch::Exact);

struct BettiNumbers {
  int b0 = 0, b1 = 0, b2 = 0;
  friend bool operator==(const BettiNumbers&, const BettiNumbers&) = default;
};

/// Critical values in increasing order.
std::vector<double> critical_values(const DecoratedMSGraph& g);
/// a_0 < c_1 < a_1 < ... < c_n < a_n with midpoints and unit margins.
std::vector<double> canonical_slicing(const DecoratedMSGraph& g);
bool is_slicing(const std::vector<double>& critical, const std::vector<double>& slicing);

/// Betti numbers of the sublevel sets at each slicing value.  Throws
/// DomainError when `slicing` does not interleave the critical values.
std::vector<BettiNumbers> betti_profile(const DecoratedMSGraph& g, const std::vector<double>& slicing);

bool homologically_equivalent(const DecoratedMSGraph& a, const DecoratedMSGraph& b);

}  // namespace msk
