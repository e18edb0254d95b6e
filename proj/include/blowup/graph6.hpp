#pragma once

#include <string>
#include <string_view>

#include "blowup/graph.hpp"

namespace blowup {

// Standard graph6 encoding: N(n) header followed by the upper triangle in
// column order, packed big-endian into printable 6-bit chunks (byte = value
// + 63). Orders 0..62 use the one-byte header, 63..64 the '~' long form.
std::string graph6_encode(const Graph& g);

// Strict decoder; throws ParseError with a byte offset on malformed input.
// Trailing newline is tolerated.
Graph graph6_decode(std::string_view text);

}  // namespace blowup
