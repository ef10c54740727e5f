#pragma once

#include <string>
#include <string_view>

#include "dissoc/graph.hpp"

namespace dissoc {

/// graph6 text for `g`, without a trailing newline.
std::string graph6_encode(const Graph& g);

/// Parses one graph6 record (an optional ">>graph6<<" prefix and a trailing
/// newline are accepted). Throws std::invalid_argument on malformed input,
/// nonzero padding bits, or orders outside [1, 64].
Graph graph6_decode(std::string_view text);

}  // namespace dissoc
