#ifndef MGD_DIAGRAM_HPP
#define MGD_DIAGRAM_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mgd {

// A dart is one quarter of a 4-valent vertex: dart id = 4*vertex + slot.
// Slots are numbered counterclockwise. sigma advances one slot ccw; alpha is
// the fixed-point-free involution pairing the two ends of each edge.
using DartId = std::int32_t;

enum class VertexKind : std::uint8_t {
  kCrossing,  // over-strand occupies odd slots {1,3}; under-strand {0,2}
  kMarked,    // marker joins (slot0,slot1) and (slot2,slot3) in the minus resolution
};

enum class Side : std::uint8_t { kMinus, kPlus };

// A crossing-free circle. It carries no darts; the face tag is informational
// placement data, preserved by parse/serialize but ignored by canonical
// equality and reset by move application.
struct FreeLoop {
  int face_tag = 0;
};

struct MgdError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : MgdError {
  ParseError(const std::string& msg, int line_, int column_)
      : MgdError(msg), line(line_), column(column_) {}
  int line = 0;
  int column = 0;
};

struct NonPlanarError : MgdError {
  NonPlanarError(const std::string& msg, std::vector<int> genus_)
      : MgdError(msg), component_genus(std::move(genus_)) {}
  std::vector<int> component_genus;  // genus per connected component of the map
};

struct OrientationError : MgdError {
  using MgdError::MgdError;
};

struct CrossingBudgetError : MgdError {
  using MgdError::MgdError;
};

struct NotHAdmissibleError : MgdError {
  using MgdError::MgdError;
};

struct SideConditionError : MgdError {
  SideConditionError(const std::string& msg, bool unknown_)
      : MgdError(msg), unknown(unknown_) {}
  bool unknown = false;  // true: budget exhausted; false: condition refuted
};

struct InternalError : MgdError {
  using MgdError::MgdError;
};

// The diagram of the marked-graph calculus: a planar combinatorial map whose
// vertices are crossings or marked vertices, plus free loops. Construction
// goes through Builder (or the text parser), which checks basic well-formedness
// but not planarity; planarity lives in validate().
class MarkedGraphDiagram {
 public:
  static constexpr int kSlots = 4;

  class Builder {
   public:
    // Adds a vertex whose four slots carry the given arc labels, listed ccw.
    // Labels are arbitrary ints; each must occur exactly twice overall.
    Builder& add_vertex(VertexKind kind, const std::array<int, 4>& labels);
    Builder& add_loop(int face_tag = 0);
    // Optional per-edge direction: label -> true means the edge is directed
    // from its first occurrence (in add order) toward its second.
    Builder& orient(int label, bool first_to_second);
    [[nodiscard]] MarkedGraphDiagram build() const;  // throws MgdError

   private:
    std::vector<VertexKind> kinds_;
    std::vector<std::array<int, 4>> labels_;
    std::vector<FreeLoop> loops_;
    std::vector<std::pair<int, bool>> orient_;
  };

  // Raw constructor for internal use (moves, resolutions). alpha must be a
  // fixed-point-free involution over 4*kinds.size() darts.
  MarkedGraphDiagram(std::vector<VertexKind> kinds, std::vector<DartId> alpha,
                     std::vector<FreeLoop> loops);
  MarkedGraphDiagram() = default;

  [[nodiscard]] int vertex_count() const { return static_cast<int>(kinds_.size()); }
  [[nodiscard]] int dart_count() const { return static_cast<int>(alpha_.size()); }
  [[nodiscard]] int edge_count() const { return dart_count() / 2; }
  [[nodiscard]] int crossing_count() const;
  [[nodiscard]] int marked_count() const;
  [[nodiscard]] const std::vector<FreeLoop>& loops() const { return loops_; }
  [[nodiscard]] VertexKind kind(int vertex) const { return kinds_[vertex]; }
  [[nodiscard]] const std::vector<VertexKind>& kinds() const { return kinds_; }
  [[nodiscard]] const std::vector<DartId>& alpha() const { return alpha_; }

  [[nodiscard]] DartId alpha(DartId d) const { return alpha_[d]; }
  [[nodiscard]] static DartId sigma(DartId d) { return (d & ~3) | ((d + 1) & 3); }
  [[nodiscard]] static DartId sigma_inv(DartId d) { return (d & ~3) | ((d + 3) & 3); }
  [[nodiscard]] static int vertex_of(DartId d) { return d >> 2; }
  [[nodiscard]] static int slot_of(DartId d) { return d & 3; }
  [[nodiscard]] static DartId dart(int vertex, int slot) { return 4 * vertex + slot; }

  // Optional orientation: per-dart bit, true when the edge points into the
  // vertex at this end. Satisfies in(d) != in(alpha(d)) when present.
  [[nodiscard]] const std::optional<std::vector<std::uint8_t>>& orientation() const {
    return orientation_;
  }
  void set_orientation(std::optional<std::vector<std::uint8_t>> o);
  void clear_orientation() { orientation_.reset(); }

  // True iff structurally identical (same vertex list, alpha, loop tags,
  // orientation). Not isomorphism; see canonical_code for that.
  friend bool operator==(const MarkedGraphDiagram& a, const MarkedGraphDiagram& b) {
    return a.kinds_ == b.kinds_ && a.alpha_ == b.alpha_ && a.loop_tags_equal(b) &&
           a.orientation_ == b.orientation_;
  }

 private:
  [[nodiscard]] bool loop_tags_equal(const MarkedGraphDiagram& b) const;
  std::vector<VertexKind> kinds_;
  std::vector<DartId> alpha_;
  std::vector<FreeLoop> loops_;
  std::optional<std::vector<std::uint8_t>> orientation_;
};

using Diagram = MarkedGraphDiagram;

// Mirror image: reflects the plane, preserving over/under and markers.
// Crossing (d0,d1,d2,d3) -> (d0,d3,d2,d1); marked (d0,d1,d2,d3) -> (d3,d2,d1,d0).
[[nodiscard]] Diagram mirror(const Diagram& d);

// Swaps over/under at one crossing (rotates its boundary attachment by one
// slot, preserving the cyclic order of edge ends).
[[nodiscard]] Diagram crossing_change(const Diagram& d, int vertex);

// Applies a permutation of vertices (perm[v] = new index). For tests.
[[nodiscard]] Diagram permute_vertices(const Diagram& d, const std::vector<int>& perm);

}  // namespace mgd

#endif  // MGD_DIAGRAM_HPP
