#ifndef MGD_MOVES_HPP
#define MGD_MOVES_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mgd/diagram.hpp"

namespace mgd {

struct CertCache;  // defined in certify.hpp

// A tangle: the interior of one side of a rewrite rule. Vertices carry local
// slot wiring; `legs` lists boundary darts counter-clockwise around the disk.
// A side made of bare arcs has -1 legs, paired up by `leg_arcs` (boundary
// positions joined by a crossing-free arc).
struct Tangle {
  std::vector<VertexKind> kinds;
  std::vector<DartId> alpha;  // -1 on legs
  std::vector<DartId> legs;   // boundary darts, ccw; -1 for a bare-arc end
  std::vector<std::pair<int, int>> leg_arcs;
};

enum class MoveType : std::uint8_t { kTypeI, kTypeII, kTypeIII };

// Extra requirements checked on top of the type-III blanket condition.
enum class ConditionClass : std::uint8_t {
  kNone,         // type I / II and plain type III
  kUpperTriple,  // leg-l component split-trivial in the plus resolution;
                 // crossing p an upper singular point on the clasp side
  kLowerTriple,  // same with minus resolution / lower singular point
  kStarred,      // Euler characteristic and double-point count must agree
};

enum class MoveDir : std::uint8_t { kForward, kBackward };

struct MoveRule {
  std::string name;          // ascii: omega1..omega10, omega6p, omega9p, ...
  std::string display_name;  // unicode form
  MoveType type = MoveType::kTypeI;
  ConditionClass condition = ConditionClass::kNone;
  Tangle lhs;
  Tangle rhs;
  // For kUpperTriple/kLowerTriple: leg index of the strand-end `l`, and the
  // rhs vertex whose image is the distinguished crossing p.
  int leg_l = -1;
  int p_rhs_vertex = -1;
  bool is_mirror = false;
  int partner = -1;  // index of the mirrored rule, or self
};

// The full rule table, built once: base rules plus deduplicated mirrors.
[[nodiscard]] const std::vector<MoveRule>& move_table();

// Name (ascii or unicode alias) -> table index; nullopt if unknown.
[[nodiscard]] std::optional<int> rule_index(const std::string& name);

// Selector -> table indices. Accepts rule names (base name includes its
// mirror), "typeI", "typeII", "typeIII", "starred", "all".
[[nodiscard]] std::vector<int> parse_rule_selector(const std::string& selector);

// Insertion anchor for rules whose match side is bare arcs (reverse
// direction of omega1/omega2/omega6/omega6'). An anchor is either a dart of
// an ordinary edge (the bulge opens into face(dart)) or a side of a free
// loop.
struct ArcAnchor {
  bool on_loop = false;
  DartId dart = -1;   // when !on_loop
  int loop = -1;      // when on_loop
  int loop_side = 0;  // 0 or 1
};

// One applicable rewrite site. Matched sites carry `image` (pattern dart ->
// host dart); insertion sites carry `arc_anchors`.
struct MoveSite {
  int rule = -1;
  MoveDir dir = MoveDir::kForward;
  int index = -1;  // position in the canonical per-(rule,dir) enumeration
  std::vector<DartId> image;
  std::vector<ArcAnchor> arc_anchors;
};

struct SiteOptions {
  int cert_depth = 8;      // budget for side-condition certification
  int cert_nodes = 20000;
  CertCache* cache = nullptr;
};

// All sites of `rule` applicable to `d` in direction `dir`, in canonical
// order (stable under relabeling). Sites whose side conditions fail or come
// back unknown are dropped.
[[nodiscard]] std::vector<MoveSite> enumerate_sites(const Diagram& d, int rule,
                                                    MoveDir dir,
                                                    const SiteOptions& opts = {});

// Same enumeration without evaluating side conditions (used internally by
// the certifier, which only ever applies type-I rules).
[[nodiscard]] std::vector<MoveSite> enumerate_sites_structural(const Diagram& d,
                                                               int rule,
                                                               MoveDir dir);

// Apply without re-checking side conditions.
[[nodiscard]] Diagram apply_site_structural(const Diagram& d, const MoveSite& site);

struct ApplyResult {
  Diagram diagram;
  std::vector<int> inserted_vertices;
  std::vector<DartId> inserted_leg_darts;  // host darts of the rhs leg images
};

[[nodiscard]] ApplyResult apply_site_structural_ex(const Diagram& d,
                                                   const MoveSite& site);

// Apply with side conditions enforced; throws SideConditionError when a
// condition is refuted or cannot be decided within the budget.
[[nodiscard]] Diagram apply_move(const Diagram& d, const MoveSite& site,
                                 const SiteOptions& opts = {});

// Replayable description of one applied move.
struct MoveStep {
  int rule = -1;
  MoveDir dir = MoveDir::kForward;
  int site_index = -1;
};

// Replay a script; throws MgdError if any step's site index is out of range.
[[nodiscard]] Diagram replay(const Diagram& d, const std::vector<MoveStep>& steps,
                             const SiteOptions& opts = {});

}  // namespace mgd

#endif  // MGD_MOVES_HPP
