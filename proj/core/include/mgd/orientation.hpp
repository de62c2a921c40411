#ifndef MGD_ORIENTATION_HPP
#define MGD_ORIENTATION_HPP

#include <optional>
#include <vector>

#include "mgd/diagram.hpp"

namespace mgd {

struct OrientationResult {
  bool orientable = false;
  // Witness when orientable: per-dart "points into the vertex" bits.
  std::optional<std::vector<std::uint8_t>> dart_in;
};

// Decides whether edge directions exist satisfying: directions are constant
// along strands through crossings, and at every marked vertex the two ends of
// one diagonal point inward and the other diagonal outward. Deterministic
// witness (smallest dart of each constraint class points inward).
[[nodiscard]] OrientationResult orientability(const Diagram& d);

}  // namespace mgd

#endif  // MGD_ORIENTATION_HPP
