#ifndef MGD_VALIDATE_HPP
#define MGD_VALIDATE_HPP

#include <vector>

#include "mgd/diagram.hpp"

namespace mgd {

// Faces are the orbits of phi = sigma . alpha.
struct FaceIndex {
  std::vector<std::vector<DartId>> faces;
  std::vector<int> face_of_dart;  // dart -> face index
};

[[nodiscard]] FaceIndex face_orbits(const Diagram& d);

struct ValidateReport {
  bool planar = false;
  int vertices = 0;
  int crossings = 0;
  int marked_vertices = 0;
  int edges = 0;
  int faces = 0;
  int free_loops = 0;
  int split_parts = 0;                // connected parts of the map + free loops
  std::vector<int> component_genus;   // per connected map component
  bool has_orientation = false;
  bool orientation_consistent = true; // meaningful when has_orientation
};

// Euler check per connected component of the map: V - E + F = 2 on each.
[[nodiscard]] ValidateReport validate(const Diagram& d);

// Throws NonPlanarError / OrientationError on failure.
void validate_or_throw(const Diagram& d);

}  // namespace mgd

#endif  // MGD_VALIDATE_HPP
