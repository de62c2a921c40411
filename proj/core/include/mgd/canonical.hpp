#ifndef MGD_CANONICAL_HPP
#define MGD_CANONICAL_HPP

#include <string>
#include <vector>

#include "mgd/diagram.hpp"

namespace mgd {

// Canonical code: lexicographically minimal rooted breadth-first encoding,
// minimized over all root darts per connected component; component codes are
// sorted and concatenated, followed by the free-loop count. Equal codes iff
// the diagrams are isomorphic as maps with matching kinds and markers.
// Free-loop face tags and orientation are ignored.
struct CanonicalCode {
  std::string bytes;
  friend bool operator==(const CanonicalCode& a, const CanonicalCode& b) = default;
  friend auto operator<=>(const CanonicalCode& a, const CanonicalCode& b) = default;
};

[[nodiscard]] CanonicalCode canonical_code(const Diagram& d);

// Per-dart rank in the canonical relabeling (0-based, relabeling-stable).
[[nodiscard]] std::vector<int> canonical_rank(const Diagram& d);

// The canonically relabeled copy: vertex order, slot rotations, and loop order
// normalized. serialize() emits exactly this layout.
[[nodiscard]] Diagram canonical_form(const Diagram& d);

}  // namespace mgd

#endif  // MGD_CANONICAL_HPP
