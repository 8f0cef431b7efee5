#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "curv/graph.hpp"

namespace curv {

// Header-free graph6 records, one graph per line. Single-byte sizes (n <= 62)
// and the '~'-prefixed 3-byte form (63 <= n <= 258047) are supported; the
// bit order is the standard column-major upper triangle. Malformed input
// raises ParseError carrying the byte offset of the defect.
Graph parse_graph6(std::string_view line);
std::string write_graph6(const Graph& g);

// Plain edge-list text: first line "n m", then m lines "u v".
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);

}  // namespace curv
