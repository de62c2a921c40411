#ifndef MGD_MOVES_INTERNAL_HPP
#define MGD_MOVES_INTERNAL_HPP

#include <vector>

#include "mgd/moves.hpp"

namespace mgd {

// Dart permutations induced by rule self-equivalences (identity included),
// one entry per equivalence, aligned across the two sides. Matches related
// by one of these describe the same rewrite and are deduplicated. A side
// made of bare arcs has an empty permutation.
struct RuleAutomorphisms {
  std::vector<std::vector<DartId>> lhs;
  std::vector<std::vector<DartId>> rhs;
};

const std::vector<RuleAutomorphisms>& rule_automorphism_table();

[[nodiscard]] inline const Tangle& pattern_side(const MoveRule& r, MoveDir dir) {
  return dir == MoveDir::kForward ? r.lhs : r.rhs;
}
[[nodiscard]] inline const Tangle& replacement_side(const MoveRule& r, MoveDir dir) {
  return dir == MoveDir::kForward ? r.rhs : r.lhs;
}

// A structural site together with its application result. Insertion
// enumeration already builds every candidate diagram to test planarity, so
// breadth-first searches take this form to avoid applying each site twice.
struct SiteExpansion {
  MoveSite site;
  Diagram result;
};

[[nodiscard]] std::vector<SiteExpansion> enumerate_expansions_structural(
    const Diagram& d, int rule, MoveDir dir);

}  // namespace mgd

#endif  // MGD_MOVES_INTERNAL_HPP
