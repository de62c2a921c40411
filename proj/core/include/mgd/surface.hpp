#ifndef MGD_SURFACE_HPP
#define MGD_SURFACE_HPP

#include <cstdint>

#include "mgd/certify.hpp"
#include "mgd/diagram.hpp"

namespace mgd {

// Invariants of the surface presented by an H-admissible diagram.
struct SurfaceReport {
  int euler_characteristic = 0;  // c(-) + c(+) - saddle count
  int double_points = 0;         // Hopf caps across both resolutions
  int trivial_minus = 0;
  int hopf_minus = 0;
  int trivial_plus = 0;
  int hopf_plus = 0;
  bool orientable = false;
  bool admissible = false;  // no Hopf caps at all: the surface is embedded
};

enum class SurfaceStatus : std::uint8_t { kOk, kNotAdmissible, kUnknown };

struct SurfaceResult {
  SurfaceStatus status = SurfaceStatus::kUnknown;
  SurfaceReport report;        // valid when status == kOk
  HAdmissibility admissibility;
};

[[nodiscard]] SurfaceResult surface_report(const Diagram& d,
                                           const CertifyBudget& budget = {},
                                           CertCache* cache = nullptr);

}  // namespace mgd

#endif  // MGD_SURFACE_HPP
