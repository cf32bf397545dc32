#pragma once

#include <stdexcept>
#include <string>

#include "elc/graph.hpp"

namespace elc {

// Parse failure for the textual graph formats. `offset` is the byte position
// in the input that triggered the failure (0-based), or -1 when the problem is
// not tied to a single byte (e.g. truncated input).
struct ParseError : std::runtime_error {
  long offset;
  ParseError(const std::string& what, long offset = -1)
      : std::runtime_error(what + (offset >= 0 ? " (byte " +
                                                     std::to_string(offset) +
                                                     ")"
                                               : std::string{})),
        offset(offset) {}
};

// graph6 short form (order <= 62). Bit-exact round-trip with encode_graph6.
Graph parse_graph6(const std::string& text);
std::string encode_graph6(const Graph& g);

// Plain edge-list format: a header line "n m" followed by m lines "u v"
// with 0-based endpoints. Extra whitespace and blank lines are tolerated.
Graph parse_edge_list(const std::string& text);

}  // namespace elc
