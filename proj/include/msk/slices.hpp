#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "msk/persistence.hpp"

namespace msk {

/// Circles are named by strings; "OUTER" is the unbounded region.
using CircleId = std::string;
inline const CircleId kOuter = "OUTER";

/**
 * Which circle of a level set encloses which.  Every circle has a parent
 * region, either another circle or OUTER.
 */
class NestingForest {
 public:
  bool contains(const CircleId& c) const { return parent_.count(c) > 0; }
  /// OUTER for top-level circles; throws for unknown circles.
  const CircleId& parent(const CircleId& c) const;
  /// Children of a circle or of OUTER, sorted.
  std::vector<CircleId> children(const CircleId& region) const;
  /// Other circles with the same parent, sorted.
  std::vector<CircleId> siblings(const CircleId& c) const;
  std::vector<CircleId> circles() const;
  std::size_t size() const { return parent_.size(); }
  bool empty() const { return parent_.empty(); }
  /// True if `a` is `c` or encloses it.  OUTER encloses everything.
  bool encloses(const CircleId& a, const CircleId& c) const;

  void add(const CircleId& c, const CircleId& parent) { parent_[c] = parent; }
  void set_parent(const CircleId& c, const CircleId& parent) { parent_.at(c) = parent; }
  void remove(const CircleId& c) { parent_.erase(c); }

  friend bool operator==(const NestingForest&, const NestingForest&) = default;

 private:
  std::map<CircleId, CircleId> parent_;
};

enum class EventKind : std::uint8_t { Min, Max, MergeNonNesting, MergeNesting, SplitNonNesting, SplitNesting };

std::string_view to_string(EventKind k);
/// JSON tag: "min", "max", "merge_nn", "merge_n", "split_nn", "split_n".
std::string_view event_tag(EventKind k);
std::optional<EventKind> parse_event_tag(std::string_view tag);

struct MinEvent {
  CircleId region;
  CircleId created;
};
struct MaxEvent {
  CircleId circle;
};
struct MergeNonNestingEvent {
  CircleId a, b;
  CircleId created;
};
/// `inner` is a child of `outer`; the result takes outer's place and inner's
/// children move out to outer's parent.
struct MergeNestingEvent {
  CircleId outer, inner;
  CircleId created;
};
/// `circle` becomes two siblings; `first_children` go with `first`, the rest with `second`.
struct SplitNonNestingEvent {
  CircleId circle;
  std::vector<CircleId> first_children;
  CircleId first, second;
};
/// `circle` becomes `outer` enclosing `inner`; the listed siblings of
/// `circle` end up inside `inner`.
struct SplitNestingEvent {
  CircleId circle;
  std::vector<CircleId> inside;
  CircleId outer, inner;
};

using EventData = std::variant<MinEvent, MaxEvent, MergeNonNestingEvent, MergeNestingEvent, SplitNonNestingEvent,
                               SplitNestingEvent>;

struct Event {
  double time = 0.0;
  EventData data;
  EventKind kind() const { return static_cast<EventKind>(data.index()); }
};

struct EmbeddingHistory {
  std::vector<Event> events;
  std::vector<double> times() const;
};

/// Throws DomainError if the event does not apply to `forest`.
NestingForest apply_event(const NestingForest& forest, const Event& e);

/// Times strictly increasing, every event applicable, empty at both ends.
void check_history(const EmbeddingHistory& h);
/// Forest after the first `k` events.
NestingForest forest_after(const EmbeddingHistory& h, std::size_t k);

/// Nesting poset: OUTER and the circles, ordered by enclosure (child <= parent).
struct NestingPoset {
  std::vector<CircleId> elements;  // OUTER first, then circles sorted
  std::vector<int> parent;         // index of parent element, -1 for OUTER

  std::size_t size() const { return elements.size(); }
  int index_of(const CircleId& c) const;
  bool leq(std::size_t a, std::size_t b) const;
  bool leq(const CircleId& a, const CircleId& b) const { return leq(index_of(a), index_of(b)); }
};

NestingPoset nesting_poset(const NestingForest& f);
/// Poset at a regular or critical value.  At an event time this is the
/// critical poset of that event (see zigzag()).
NestingPoset nesting_poset_at(const EmbeddingHistory& h, double value);
bool poset_isomorphic(const NestingPoset& a, const NestingPoset& b);
/// Canonical string of the rooted tree (AHU); equal iff isomorphic.
std::string poset_code(const NestingPoset& p);
std::string hasse_dot(const NestingPoset& p, const std::string& name = "poset");

enum class ArrowDirection : std::uint8_t { Forward, Backward };  // Forward: left node -> right node

struct ZigzagArrow {
  std::size_t left = 0;  // arrow joins nodes left and left+1
  ArrowDirection direction = ArrowDirection::Forward;
  std::vector<std::pair<CircleId, CircleId>> map;  // source element -> target element
  bool injective = false;
  bool surjective = false;
  bool order_preserving = false;
  bool isomorphism = false;
};

struct ZigzagNode {
  double value = 0.0;
  bool critical = false;
  NestingPoset poset;
};

/// N_{a0} - N_{t1} - N_{a1} - ... - N_{tn} - N_{an}.
struct Zigzag {
  std::vector<ZigzagNode> nodes;
  std::vector<ZigzagArrow> arrows;
};

std::vector<double> default_slicing(const EmbeddingHistory& h);
bool is_slicing_of(const EmbeddingHistory& h, const std::vector<double>& slicing);
/// Throws DomainError if `slicing` does not interleave the event times.
Zigzag zigzag(const EmbeddingHistory& h, const std::vector<double>& slicing);
Zigzag zigzag(const EmbeddingHistory& h);

/// phi^dagger(y) = max{x : phi(x) <= y} for an order-preserving arrow, when
/// that maximum exists.  Only a Galois connection when phi has an upper adjoint;
/// elements without a unique maximum map to nothing.
std::vector<std::pair<CircleId, std::optional<CircleId>>> galois_reverse(const Zigzag& z, std::size_t arrow);
extern const char* const kGaloisCaveat;

/// Reeb graph of the history: one node per event, one arc per circle lifetime.
HeightGraph reeb_graph(const EmbeddingHistory& h);
Barcode levelset_barcode(const EmbeddingHistory& h);

/// Canonical form up to renaming circles; equal iff poset equivalent.
std::string history_code(const EmbeddingHistory& h);
bool poset_equivalent(const EmbeddingHistory& a, const EmbeddingHistory& b);

/// Experimental: intervals obtained by following regions through the zigzag
/// arrows (elder rule at collisions).  `decomposable` is false when an
/// arrow forced an arbitrary choice.
struct CombinatorialBarcode {
  Barcode barcode;
  bool decomposable = true;
};
CombinatorialBarcode combinatorial_barcode(const EmbeddingHistory& h);

/// A random valid history with at most `max_events` events (at least 2).
EmbeddingHistory random_history(std::mt19937_64& rng, std::size_t max_events);

}  // namespace msk
