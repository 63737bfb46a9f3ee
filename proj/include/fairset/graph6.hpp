#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "fairset/graph.hpp"

namespace fairset {

// graph6 text format: one graph per line. Header byte(s) encode n
// (n + 63 for n <= 62, '~' plus three 6-bit groups up to n = 258047, though
// this library only accepts n <= 64); the upper triangle follows
// column-major, packed six bits per byte, each byte offset by 63.
Graph parse_graph6(std::string_view line);
std::string format_graph6(const Graph& g);

// Edge list format: first line "n m", then m lines "u v" (0-based).
// '#' starts a comment, blank lines are skipped.
Graph parse_edge_list(std::istream& in);

}  // namespace fairset
