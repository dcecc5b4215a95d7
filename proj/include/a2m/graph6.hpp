#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "a2m/graph.hpp"

namespace a2m {

class Graph6Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parse one graph6 line. An optional ">>graph6<<" prefix and a trailing
/// CR/LF are accepted; anything else outside the format is an error,
/// including nonzero padding bits.
Graph parse_graph6(std::string_view text);

/// graph6 encoding of g (no header, no newline).
std::string emit_graph6(const Graph& g);

}  // namespace a2m
