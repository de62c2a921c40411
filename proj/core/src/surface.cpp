#include "mgd/orientation.hpp"
#include "mgd/resolve.hpp"
#include "mgd/surface.hpp"

namespace mgd {

SurfaceResult surface_report(const Diagram& d, const CertifyBudget& budget,
                             CertCache* cache) {
  SurfaceResult out;
  out.admissibility = h_admissible(d, budget, cache);
  if (out.admissibility.verdict == Verdict::kRefuted) {
    out.status = SurfaceStatus::kNotAdmissible;
    return out;
  }
  if (out.admissibility.verdict == Verdict::kUnknown) {
    out.status = SurfaceStatus::kUnknown;
    return out;
  }

  int marked = 0;
  for (int v = 0; v < d.vertex_count(); ++v) {
    if (d.kind(v) == VertexKind::kMarked) ++marked;
  }
  SurfaceReport& r = out.report;
  r.trivial_minus = out.admissibility.lower.trivial_count;
  r.hopf_minus = out.admissibility.lower.hopf_count;
  r.trivial_plus = out.admissibility.upper.trivial_count;
  r.hopf_plus = out.admissibility.upper.hopf_count;
  r.euler_characteristic =
      link_components(resolve(d, Side::kMinus).diagram).count +
      link_components(resolve(d, Side::kPlus).diagram).count - marked;
  r.double_points = r.hopf_minus + r.hopf_plus;
  r.orientable = orientability(d).orientable;
  r.admissible = r.double_points == 0;
  out.status = SurfaceStatus::kOk;
  return out;
}

}  // namespace mgd
