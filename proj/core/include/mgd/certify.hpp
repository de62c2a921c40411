#ifndef MGD_CERTIFY_HPP
#define MGD_CERTIFY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mgd/canonical.hpp"
#include "mgd/diagram.hpp"
#include "mgd/moves.hpp"

namespace mgd {

struct CertifyBudget {
  int depth = 8;       // max moves along any simplification path
  int nodes = 20000;   // max distinct diagrams explored
};

enum class Verdict : std::uint8_t { kCertified, kRefuted, kUnknown };

// One connected part of a link diagram, certified to present a split union
// of trivial circles and Hopf links (or refuted / undecided). The witness is
// a type-I move script from the part to a terminal diagram whose split parts
// are all bare circles or minimal Hopf diagrams.
struct PartCertificate {
  Verdict verdict = Verdict::kUnknown;
  int trivial_count = 0;
  int hopf_count = 0;
  int hopf_positive_count = 0;          // of the hopf_count, positive clasps
  std::vector<MoveStep> witness;
  std::string refutation;               // human-readable reason when refuted
};

// Certificate that a link diagram is H-trivial: a split union of trivial
// circles and Hopf links. Entries follow split-part order (free loops last).
struct Certificate {
  Verdict verdict = Verdict::kUnknown;
  std::vector<PartCertificate> parts;
  int trivial_count = 0;  // circles across certified parts
  int hopf_count = 0;     // Hopf links across certified parts
  std::string refutation;
};

// Memo keyed by canonical code; verdicts and witnesses are isomorphism
// invariants because site indices are canonical.
struct CertCache {
  std::map<CanonicalCode, PartCertificate> parts;
};

[[nodiscard]] Certificate certify_h_trivial(const Diagram& link,
                                            const CertifyBudget& budget = {},
                                            CertCache* cache = nullptr);

struct HAdmissibility {
  Verdict verdict = Verdict::kUnknown;  // both resolutions H-trivial?
  Certificate lower;                    // minus resolution
  Certificate upper;                    // plus resolution
};

[[nodiscard]] HAdmissibility h_admissible(const Diagram& d,
                                          const CertifyBudget& budget = {},
                                          CertCache* cache = nullptr);

// Per-crossing singularity classification against one resolution. Requires
// the diagram to be H-admissible (throws NotHAdmissibleError when the
// certificate is refuted; unknown certificates yield kUnknown entries).
enum class SingularMark : std::uint8_t { kYes, kNo, kUnknown };

struct SingularReport {
  std::vector<SingularMark> marks;      // indexed by vertex; kNo on marked
  std::vector<int> singular_vertices;   // vertices marked kYes
  bool any_unknown = false;
};

[[nodiscard]] SingularReport singular_points(const Diagram& d, Side side,
                                             const CertifyBudget& budget = {},
                                             CertCache* cache = nullptr);

}  // namespace mgd

#endif  // MGD_CERTIFY_HPP
