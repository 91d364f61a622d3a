#pragma once

// Text formats.
//
// Hypergraph file: '#' starts a comment, blank lines are ignored. The first
// significant line is "n <int>"; each further line is one hyperedge given as
// 1-based vertex ids separated by spaces or commas, in any order. Repeated ids
// on a line collapse. File order of the edges is KG vertex order.
//
// Coloring file: one positive integer per significant line; line i colors
// hyperedge i.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "altermatic/colorer.hpp"
#include "altermatic/hypercore.hpp"

namespace altermatic {

Hypergraph parse_hypergraph(std::istream& in);
Hypergraph parse_hypergraph(std::string_view text);
std::string serialize_hypergraph(const Hypergraph& h);

Coloring parse_coloring(std::istream& in, std::size_t expected_len);
Coloring parse_coloring(std::string_view text, std::size_t expected_len);
std::string serialize_coloring(const Coloring& c);

/// Reads a whole file; "-" means standard input. Throws ParseError if unreadable.
std::string read_input(const std::string& path);

/// FNV-1a 64-bit digest as 16 hex digits.
std::string digest_hex(std::string_view bytes);

} // namespace altermatic
