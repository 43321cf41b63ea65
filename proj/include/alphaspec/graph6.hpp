#pragma once

#include <string>
#include <string_view>

#include "alphaspec/graph.hpp"

namespace alphaspec {

/// graph6 encoding (McKay's format): N(n) followed by the upper triangle of
/// the adjacency matrix in column order, six bits per printable byte.
std::string graph6_encode(const Graph& g);

/// Inverse of graph6_encode. Accepts an optional ">>graph6<<" header and
/// surrounding whitespace; throws ParseError with the offending byte offset.
Graph graph6_decode(std::string_view text);

}  // namespace alphaspec
