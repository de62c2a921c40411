#ifndef MGD_PLANARITY_INTERNAL_HPP
#define MGD_PLANARITY_INTERNAL_HPP

#include "mgd/diagram.hpp"

namespace mgd {

// Planarity of every connected component, equivalent to validate(d).planar
// but without materializing the face index. Used on hot paths that build and
// test many candidate diagrams.
[[nodiscard]] bool planar_quick(const Diagram& d);

}  // namespace mgd

#endif  // MGD_PLANARITY_INTERNAL_HPP
