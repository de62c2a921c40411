#ifndef MGD_SEARCH_HPP
#define MGD_SEARCH_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mgd/certify.hpp"
#include "mgd/diagram.hpp"
#include "mgd/laurent.hpp"
#include "mgd/moves.hpp"

namespace mgd {

struct SearchBudget {
  int depth = 8;
  long long nodes = 200000;
};

enum class SearchOutcome : std::uint8_t {
  kPath,                // move script found
  kExhausted,           // budget spent, no separation either
  kDistinguished,       // an invariant separates the endpoints
  kPreconditionUnknown  // type-III rules requested, admissibility undecided
};

// Invariant comparison backing a kDistinguished outcome. Fields beyond the
// Euler characteristic are filled when meaningful for the rule set used.
struct Distinguisher {
  std::string invariant;  // which one differs
  int euler_a = 0;
  int euler_b = 0;
  std::optional<int> double_points_a;
  std::optional<int> double_points_b;
  std::optional<std::pair<int, int>> resolution_counts_a;  // (c-, c+)
  std::optional<std::pair<int, int>> resolution_counts_b;
  std::vector<int> linking_abs_a;  // sorted |lk| multiset
  std::vector<int> linking_abs_b;
  std::set<LaurentPolynomial> jones_minus_a, jones_plus_a;
  std::set<LaurentPolynomial> jones_minus_b, jones_plus_b;
};

struct SearchResult {
  SearchOutcome outcome = SearchOutcome::kExhausted;
  std::vector<MoveStep> path;  // valid when outcome == kPath
  long long nodes_expanded = 0;
  int depth_reached = 0;
  std::optional<Distinguisher> distinguisher;
};

// Breadth-first search from `a` toward any diagram canonically equal to `b`,
// using the listed rules in both directions. When the rule set includes a
// type-III rule both endpoints must be H-admissible (refuted certificates
// throw NotHAdmissibleError; undecided ones yield kPreconditionUnknown).
[[nodiscard]] SearchResult search_equivalence(const Diagram& a, const Diagram& b,
                                              const std::vector<int>& rules,
                                              const SearchBudget& budget = {},
                                              const SiteOptions& opts = {});

}  // namespace mgd

#endif  // MGD_SEARCH_HPP
