#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

namespace msk {

enum class MorseIndex : std::uint8_t { Minimum = 0, Saddle = 1, Maximum = 2 };
enum class EdgeKind : std::uint8_t { SaddleMin, SaddleMax };

std::string_view to_string(MorseIndex index);
std::string_view to_string(EdgeKind kind);

/// Swaps minima and maxima; saddles are fixed.
constexpr MorseIndex dual(MorseIndex index) {
  return static_cast<MorseIndex>(2 - static_cast<int>(index));
}
constexpr EdgeKind edge_kind_to(MorseIndex extremum) {
  return extremum == MorseIndex::Maximum ? EdgeKind::SaddleMax : EdgeKind::SaddleMin;
}

struct CriticalVertex {
  std::string id;
  MorseIndex index = MorseIndex::Minimum;
  friend bool operator==(const CriticalVertex&, const CriticalVertex&) = default;
};

inline constexpr std::size_t kNoDart = static_cast<std::size_t>(-1);

/// The graph file contents before any structural checking.  Ordered containers
/// keep the order of the input file so that decoding is deterministic.
struct GraphEncoding {
  struct Vertex {
    std::string id;
    int index = 0;
    std::optional<double> value;
  };
  struct Edge {
    std::string id;
    std::vector<std::string> ends;
    std::optional<std::string> kind;
  };
  std::vector<Vertex> vertices;
  std::vector<std::pair<std::string, std::vector<std::string>>> rotations;
  std::vector<std::pair<std::string, std::string>> darts;  // dart id -> edge id
  std::vector<Edge> edges;
};

/**
 * Combinatorial map of a Morse-Smale graph on the sphere.
 *
 * Edge e owns darts 2e and 2e+1; the rotation at a vertex lists its darts in
 * counter-clockwise order.  Faces are orbits of d -> next_around(twin(d)).
 *
 * Instances are always structurally sound (twins consistent, every dart in
 * exactly one rotation).  Whether they satisfy the Morse-Smale invariants is
 * a separate question answered by validate().
 */
class MSGraph {
 public:
  MSGraph() = default;

  /// The single-min, single-max map with no edges.
  static MSGraph base_sphere();

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edge_kinds_.size(); }
  std::size_t dart_count() const { return 2 * edge_count(); }

  const CriticalVertex& vertex(std::size_t v) const { return vertices_[v]; }
  const std::vector<CriticalVertex>& vertices() const { return vertices_; }
  MorseIndex index(std::size_t v) const { return vertices_[v].index; }
  std::optional<std::size_t> find_vertex(std::string_view id) const;
  std::optional<std::size_t> find_edge(std::string_view id) const;
  std::size_t count(MorseIndex index) const;

  static constexpr std::size_t twin(std::size_t d) { return d ^ 1U; }
  static constexpr std::size_t edge_of(std::size_t d) { return d >> 1U; }

  std::size_t dart_vertex(std::size_t d) const { return dart_vertex_[d]; }
  std::size_t other_end(std::size_t d) const { return dart_vertex_[twin(d)]; }
  std::size_t next_around(std::size_t d) const;
  std::size_t prev_around(std::size_t d) const;
  std::size_t face_step(std::size_t d) const { return next_around(twin(d)); }
  /// Position of d inside rotation(dart_vertex(d)).
  std::size_t slot(std::size_t d) const { return dart_slot_[d]; }

  const std::vector<std::size_t>& rotation(std::size_t v) const { return rotations_[v]; }
  std::size_t degree(std::size_t v) const { return rotations_[v].size(); }

  EdgeKind edge_kind(std::size_t e) const { return edge_kinds_[e]; }
  const std::string& edge_id(std::size_t e) const { return edge_ids_[e]; }
  const std::string& dart_id(std::size_t d) const { return dart_ids_[d]; }

  bool is_base_sphere() const;

  /// Same graph with every rotation reversed (orientation flip).
  MSGraph mirrored() const;

  friend bool operator==(const MSGraph&, const MSGraph&) = default;

 private:
  friend class MapEditor;
  friend MSGraph from_encoding(const GraphEncoding& enc);

  void index_darts();

  std::vector<CriticalVertex> vertices_;
  std::vector<std::vector<std::size_t>> rotations_;
  std::vector<std::size_t> dart_vertex_;
  std::vector<std::size_t> dart_slot_;
  std::vector<EdgeKind> edge_kinds_;
  std::vector<std::string> edge_ids_;
  std::vector<std::string> dart_ids_;
};

/// Problems that prevent building a map at all (dangling ids, darts in two rotations, ...).
std::vector<std::string> structural_errors(const GraphEncoding& enc);

/// Throws MalformedInput listing the structural errors, if any.
MSGraph from_encoding(const GraphEncoding& enc);
GraphEncoding to_encoding(const MSGraph& g);

enum class Violation : std::uint8_t {
  SaddleDegree,
  SaddleAlternation,
  BadEdgeEndpoints,
  MinMaxEdge,
  EdgeKindMismatch,
  EulerCount,
  NotConnected,
  NotSphere,
  NonQuadrangleFace,
};

std::string_view to_string(Violation v);

struct ValidationIssue {
  Violation kind;
  std::string detail;
};

struct ValidationReport {
  std::vector<std::string> structural_errors;
  std::vector<ValidationIssue> violations;

  bool ok() const { return structural_errors.empty() && violations.empty(); }
  bool has(Violation v) const;
};

ValidationReport validate(const MSGraph& g);
ValidationReport validate(const GraphEncoding& enc);

/// A face as the cyclic sequence of darts leaving its corners.  The base
/// sphere has a single degenerate face with no darts and corners {min, max}.
struct Face {
  std::vector<std::size_t> darts;
  std::vector<std::size_t> corners;
  bool degenerate = false;
};

/// Faces in order of their smallest dart.
std::vector<Face> faces(const MSGraph& g);

/// Face index of every dart (the face lying between d and its predecessor's twin).
std::vector<std::size_t> face_of_darts(const MSGraph& g);

int euler_characteristic(const MSGraph& g);

/// Complete isomorphism invariant of the map (orientation preserving unless
/// allow_mirror).  Vertex and edge identifiers do not enter the code.
struct CanonicalCode {
  std::vector<std::uint32_t> words;
  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
  std::string hex() const;
};

struct CanonicalCodeHash {
  std::size_t operator()(const CanonicalCode& c) const noexcept;
};

CanonicalCode canonical_code(const MSGraph& g, bool allow_mirror = false);
bool is_isomorphic(const MSGraph& a, const MSGraph& b, bool allow_mirror = false);

/**
 * Mutable map used by the rewriting moves.  Darts carry explicit twins while
 * editing; finish() compacts back into the MSGraph layout, keeping ids of
 * surviving elements.
 */
class MapEditor {
 public:
  explicit MapEditor(const MSGraph& g);

  std::size_t add_vertex(MorseIndex index);
  /// Adds an edge u-v.  The new dart at u goes right after `after_u`
  /// (kNoDart when u has no darts yet); same for v.  Returns (dart at u, dart at v).
  std::pair<std::size_t, std::size_t> insert_edge(std::size_t u, std::size_t after_u, std::size_t v,
                                                  std::size_t after_v);
  /// Puts a new degree-2 vertex w (already created, no darts) in the middle of
  /// the edge of dart d.  Returns w's dart facing d's vertex.
  std::size_t subdivide(std::size_t d, std::size_t w);
  void remove_edge(std::size_t d);
  void remove_vertex(std::size_t v);
  /// Replaces dart `slot` in rotation(dart_vertex(slot)) by `darts`, reassigning them.
  void splice(std::size_t slot, const std::vector<std::size_t>& darts);
  /// Moves the darts `darts` (in order) from their vertex to the empty vertex w.
  void move_darts(const std::vector<std::size_t>& darts, std::size_t w);

  std::size_t twin(std::size_t d) const { return darts_[d].twin; }
  std::size_t dart_vertex(std::size_t d) const { return darts_[d].vertex; }
  MorseIndex index(std::size_t v) const { return vertices_[v].data.index; }
  const std::vector<std::size_t>& rotation(std::size_t v) const { return vertices_[v].rotation; }
  std::size_t next_around(std::size_t d) const;
  std::size_t face_step(std::size_t d) const { return next_around(twin(d)); }
  std::vector<std::size_t> face_orbit(std::size_t d) const;

  /// Finds, in the face containing dart `d`, the corner of the given index and
  /// returns the dart after which a new dart should be inserted there.  Throws
  /// DomainError if there is not exactly one such corner.
  std::size_t unique_corner_gap(std::size_t d, MorseIndex index) const;

  MSGraph finish() const;

 private:
  struct VertexRec {
    CriticalVertex data;
    std::vector<std::size_t> rotation;
    bool alive = true;
  };
  struct DartRec {
    std::size_t vertex;
    std::size_t twin;
    std::string id;
    std::string edge_id;
    bool alive = true;
  };
  std::size_t new_dart(std::size_t v);
  std::string fresh(char prefix, std::size_t& counter, std::unordered_set<std::string>& taken);
  std::size_t position(std::size_t d) const;

  std::vector<VertexRec> vertices_;
  std::vector<DartRec> darts_;
  std::unordered_set<std::string> vertex_ids_, edge_ids_, dart_ids_;
  std::size_t vertex_counter_ = 0;
  std::size_t edge_counter_ = 0;
  std::size_t dart_counter_ = 0;
};

}  // namespace msk
