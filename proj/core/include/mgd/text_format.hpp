#ifndef MGD_TEXT_FORMAT_HPP
#define MGD_TEXT_FORMAT_HPP

#include <string>

#include "mgd/diagram.hpp"

namespace mgd {

// Text format, UTF-8, whitespace-separated tokens, '#' comments to end of line:
//   X+(a,b,c,d)   crossing, labels ccw from the incoming under-strand end;
//                 over-strand on the (b,d) diagonal
//   X-(a,b,c,d)   crossing with over-strand on the (a,c) diagonal
//                 (normalized on parse: X-(a,b,c,d) == X+(b,c,d,a))
//   M(a,b,c,d)    marked vertex, labels ccw from slot 0; the minus resolution
//                 joins (a,b) and (c,d)
//   O(k)          crossing-free loop with fresh label k; optional @f face tag
//   orient: 1>, 2<, ...   optional per-edge directions; '>' = directed from the
//                 first occurrence of the label (reading order) to the second
// Every arc label occurs exactly twice; loop labels are globally fresh.
[[nodiscard]] Diagram parse(const std::string& text);  // throws ParseError

// Emits the canonical relabeling of d (tokens in canonical dart order); the
// output re-parses to a diagram with equal canonical code, and serialization
// of a canonical form is a byte-level fixed point.
[[nodiscard]] std::string serialize(const Diagram& d);

}  // namespace mgd

#endif  // MGD_TEXT_FORMAT_HPP
