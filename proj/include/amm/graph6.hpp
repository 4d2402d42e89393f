#pragma once

#include <string>
#include <string_view>

#include "amm/graph.hpp"

namespace amm {

/// graph6 encoding: size header, then the upper triangle column by column
/// (x(0,1), x(0,2), x(1,2), x(0,3), ...) packed six bits per byte with
/// offset 63. No trailing newline.
std::string write_graph6(const Graph& g);

/// Throws InputError naming the byte offset of the first bad byte.
Graph parse_graph6(std::string_view text);

}  // namespace amm
