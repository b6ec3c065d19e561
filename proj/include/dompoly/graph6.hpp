#pragma once

#include "dompoly/graph.hpp"

#include <cstddef>
#include <cstdint>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace dompoly {

/// Largest order expressible in a graph6 header (8-byte long form).
inline constexpr std::uint64_t kGraph6MaxOrder = 68719476735ULL;

/// Decodes one graph6 record (short or long form header).
///
/// Throws ParseError with the byte offset on a malformed header, a byte outside
/// 63..126, a truncated or overlong bit vector, or nonzero padding bits.
/// sparse6 (':') and digraph6 ('&') records raise UnsupportedFormatError.
Graph parse_graph6(std::string_view record);

/// Canonical graph6 bytes; parse_graph6(encode_graph6(g)) == g.
std::string encode_graph6(const Graph& g);

struct Graph6Record {
    std::size_t line = 0;  // 1-based line number in the source
    std::string text;
};

/// Splits a graph6 stream into records: one per line, trailing CR stripped,
/// blank lines dropped and a leading ">>graph6<<" header removed.
std::vector<Graph6Record> read_graph6_records(std::istream& in);

/// Same, from a file; throws Error if it cannot be opened.
std::vector<Graph6Record> read_graph6_file(const std::string& path);

}  // namespace dompoly
