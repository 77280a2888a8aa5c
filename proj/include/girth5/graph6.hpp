#pragma once

#include <string>
#include <string_view>

#include "girth5/graph.hpp"

namespace girth5 {

/// Optional first-line header some tools emit.
inline constexpr std::string_view kGraph6Header = ">>graph6<<";

/// Standard graph6 body (no header, no newline). Throws CapacityError for
/// orders the format's 4-byte size field cannot hold.
std::string encode_graph6(const Graph& g);

/// Accepts an optional header and one trailing newline. Rejects anything
/// that would not re-encode to the same body: bytes outside 63..126,
/// non-minimal order fields, wrong body length, nonzero padding bits.
Graph decode_graph6(std::string_view text);

}  // namespace girth5
