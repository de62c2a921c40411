#ifndef MGD_BRACKET_HPP
#define MGD_BRACKET_HPP

#include <set>
#include <vector>

#include "mgd/laurent.hpp"
#include "mgd/diagram.hpp"

namespace mgd {

// Hard cap on the plain 2^n state sum.
inline constexpr int kMaxBracketCrossings = 24;

// Kauffman bracket of a link diagram (no marked vertices), normalized to
// <unknot> = 1. The A-smoothing joins slot pairs (0,1),(2,3); B joins
// (1,2),(3,0); each state contributes A^(a-b) * delta^(loops-1).
// Honors MGD_THREADS (deterministic chunked reduction).
// Throws CrossingBudgetError above kMaxBracketCrossings.
[[nodiscard]] LaurentPolynomial kauffman_bracket(const Diagram& d);

// f-polynomial (Jones, kept in the variable A): (-A^3)^(-writhe) * bracket.
[[nodiscard]] LaurentPolynomial jones_from_bracket(const Diagram& d,
                                                   const std::vector<std::uint8_t>& dart_in);

// Under the canonical orientation.
[[nodiscard]] LaurentPolynomial jones(const Diagram& d);

// f-values over all orientations (2^(c-1) up to global reversal).
[[nodiscard]] std::set<LaurentPolynomial> jones_set(const Diagram& d);

}  // namespace mgd

#endif  // MGD_BRACKET_HPP
