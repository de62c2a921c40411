#ifndef MGD_RESOLVE_HPP
#define MGD_RESOLVE_HPP

#include <vector>

#include "mgd/diagram.hpp"

namespace mgd {

// Result of smoothing every marked vertex to one side. Crossings survive in
// their original relative order; chains of marked-vertex joins that close up
// without meeting a surviving dart become free loops.
struct Resolution {
  Diagram diagram;
  // For every dart of the source diagram: where its edge material went.
  // carrier_is_loop[d] == false: carrier[d] is a dart of .diagram
  // carrier_is_loop[d] == true : carrier[d] is a free-loop index of .diagram
  std::vector<std::uint8_t> carrier_is_loop;
  std::vector<int> carrier;
  std::vector<int> crossing_vertex;  // source vertex -> vertex in .diagram, -1 for marked
};

[[nodiscard]] Resolution resolve(const Diagram& d, Side side);

// Link components of a diagram with no marked vertices. Components are
// numbered by their smallest dart; free loops follow, in loop order.
struct Components {
  int count = 0;
  std::vector<int> of_dart;  // dart -> component
  std::vector<int> of_loop;  // loop index -> component
};

[[nodiscard]] Components link_components(const Diagram& d);

// Connected parts of the diagram (vertices joined by edges); each free loop is
// its own part. Applies to marked diagrams too.
struct SplitParts {
  int count = 0;
  std::vector<int> of_vertex;
  std::vector<int> of_loop;
};

[[nodiscard]] SplitParts split_parts(const Diagram& d);

// The given split part as a standalone diagram: vertices keep their relative
// order; a free-loop part becomes a diagram holding just that loop.
[[nodiscard]] Diagram extract_split_part(const Diagram& d, int part);

// Deterministic orientation of a link diagram (always exists): within each
// constraint class the smallest dart points into its vertex.
[[nodiscard]] std::vector<std::uint8_t> canonical_link_orientation(const Diagram& d);

// Sign of a crossing under the given orientation: positive iff the over-strand
// enters the slot clockwise-adjacent to the under-strand entry slot.
[[nodiscard]] int crossing_sign(const Diagram& d, int vertex,
                                const std::vector<std::uint8_t>& dart_in);

struct LinkInvariants {
  int components = 0;
  int writhe = 0;  // under the canonical orientation
  std::vector<std::vector<int>> linking_abs;
  std::vector<std::vector<int>> linking_signed;  // canonical orientation
  int split_parts = 0;
};

[[nodiscard]] LinkInvariants link_invariants(const Diagram& d);

}  // namespace mgd

#endif  // MGD_RESOLVE_HPP
