#pragma once

#include <string>

#include "spectraham/graph.hpp"

namespace spectraham {

/// Decode a graph6 string (optional ">>graph6<<" header accepted).
/// Bit order follows the standard definition: upper triangle column-major,
/// 6-bit chunks offset by 63. Malformed input raises ParseError with the
/// offending byte offset in the message.
Graph parse_graph6(const std::string& text);

/// Canonical graph6 encoding of the labelled graph; inverse of parse_graph6.
std::string write_graph6(const Graph& g);

} // namespace spectraham
