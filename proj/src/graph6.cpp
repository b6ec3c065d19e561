#include "dompoly/graph6.hpp"

#include "dompoly/errors.hpp"

#include <fstream>

namespace dompoly {

namespace {

constexpr unsigned char kBias = 63;
constexpr unsigned char kLongMarker = 126;
constexpr std::string_view kGraph6Header = ">>graph6<<";
constexpr std::string_view kSparse6Header = ">>sparse6<<";
constexpr std::string_view kDigraph6Header = ">>digraph6<<";

unsigned sextet(std::string_view record, std::size_t offset) {
    if (offset >= record.size()) throw ParseError("truncated graph6 record", offset);
    const auto byte = static_cast<unsigned char>(record[offset]);
    if (byte < kBias || byte > kLongMarker) throw ParseError("byte outside the graph6 range 63..126", offset);
    return byte - kBias;
}

struct Header {
    std::uint64_t order;
    std::size_t length;
};

Header parse_header(std::string_view record) {
    if (record.empty()) throw ParseError("empty graph6 record", 0);
    if (record.front() == ':') throw UnsupportedFormatError("sparse6 is not supported", 0);
    if (record.front() == '&') throw UnsupportedFormatError("digraph6 is not supported", 0);
    if (static_cast<unsigned char>(record[0]) != kLongMarker) return {sextet(record, 0), 1};
    if (record.size() > 1 && static_cast<unsigned char>(record[1]) == kLongMarker) {
        std::uint64_t n = 0;
        for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | sextet(record, i);
        if (n <= 258047) throw ParseError("8-byte graph6 header used for a small order", 2);
        return {n, 8};
    }
    std::uint64_t n = 0;
    for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | sextet(record, i);
    if (n <= 62) throw ParseError("4-byte graph6 header used for a small order", 1);
    return {n, 4};
}

void append_order(std::string& out, std::uint64_t n) {
    auto push = [&out](std::uint64_t six) { out.push_back(static_cast<char>(kBias + six)); };
    if (n <= 62) {
        push(n);
    } else if (n <= 258047) {
        out.push_back(static_cast<char>(kLongMarker));
        for (int shift = 12; shift >= 0; shift -= 6) push((n >> shift) & 63U);
    } else {
        out.push_back(static_cast<char>(kLongMarker));
        out.push_back(static_cast<char>(kLongMarker));
        for (int shift = 30; shift >= 0; shift -= 6) push((n >> shift) & 63U);
    }
}

}  // namespace

Graph parse_graph6(std::string_view record) {
    const Header header = parse_header(record);
    const std::uint64_t n = header.order;
    const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::uint64_t body_bytes = (bits + 5) / 6;
    const std::uint64_t expected = header.length + body_bytes;
    if (record.size() < expected) throw ParseError("truncated graph6 bit vector", record.size());
    if (record.size() > expected) throw ParseError("trailing bytes after graph6 bit vector", expected);

    std::vector<Edge> edges;
    std::uint64_t k = 0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i, ++k) {
            const std::size_t offset = header.length + k / 6;
            if ((sextet(record, offset) >> (5 - k % 6)) & 1U) edges.emplace_back(i, j);
        }
    }
    if (bits % 6 != 0) {
        const std::size_t last = record.size() - 1;
        const unsigned padding_mask = (1U << (6 - bits % 6)) - 1;
        if (sextet(record, last) & padding_mask) throw ParseError("nonzero graph6 padding bits", last);
    }
    return Graph::from_edges(n, edges);
}

std::string encode_graph6(const Graph& g) {
    const std::uint64_t n = g.order();
    if (n > kGraph6MaxOrder) throw UnsupportedSizeError("order " + std::to_string(n) + " exceeds the graph6 limit");
    std::string out;
    append_order(out, n);
    unsigned acc = 0;
    int filled = 0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1U : 0U);
            if (++filled == 6) {
                out.push_back(static_cast<char>(kBias + acc));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>(kBias + (acc << (6 - filled))));
    return out;
}

std::vector<Graph6Record> read_graph6_records(std::istream& in) {
    std::vector<Graph6Record> records;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::string_view text = line;
        if (text.starts_with(kGraph6Header)) text.remove_prefix(kGraph6Header.size());
        if (text.empty()) continue;
        // sparse6/digraph6 records keep their leading ':' or '&' so the parser rejects them.
        if (text.starts_with(kSparse6Header)) text.remove_prefix(kSparse6Header.size());
        if (text.starts_with(kDigraph6Header)) text.remove_prefix(kDigraph6Header.size());
        if (text.empty()) continue;
        records.push_back({number, std::string(text)});
    }
    return records;
}

std::vector<Graph6Record> read_graph6_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open graph6 file '" + path + "'");
    return read_graph6_records(in);
}

}  // namespace dompoly
