#include "dompoly/families.hpp"

#include "dompoly/errors.hpp"

#include <charconv>
#include <vector>

namespace dompoly {

namespace {

std::size_t parse_count(std::string_view text, std::string_view spec) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
        throw DomainError("bad family parameter in '" + std::string(spec) + "'");
    }
    return value;
}

std::vector<Edge> cycle_edges(std::size_t n, std::size_t offset) {
    std::vector<Edge> edges;
    if (n == 2) edges.emplace_back(offset, offset + 1);
    if (n >= 3) {
        for (std::size_t i = 0; i < n; ++i) edges.emplace_back(offset + i, offset + (i + 1) % n);
    }
    return edges;
}

}  // namespace

GraphFamily GraphFamily::parse(std::string_view spec) {
    const auto colon = spec.find(':');
    if (colon == std::string_view::npos) throw DomainError("family spec must look like name:params, got '" + std::string(spec) + "'");
    const std::string_view name = spec.substr(0, colon);
    const std::string_view params = spec.substr(colon + 1);
    if (name == "join") {
        const auto comma = params.find(',');
        if (comma == std::string_view::npos) throw DomainError("join family needs two parameters M,N");
        return join_complete_cycle(parse_count(params.substr(0, comma), spec), parse_count(params.substr(comma + 1), spec));
    }
    const std::size_t n = parse_count(params, spec);
    if (name == "cycle") return cycle(n);
    if (name == "path") return path(n);
    if (name == "complete") return complete(n);
    if (name == "wheel") return wheel(n);
    throw DomainError("unknown graph family '" + std::string(name) + "'");
}

std::string GraphFamily::to_string() const {
    switch (tag) {
        case FamilyTag::Cycle: return "cycle:" + std::to_string(n);
        case FamilyTag::Path: return "path:" + std::to_string(n);
        case FamilyTag::Complete: return "complete:" + std::to_string(n);
        case FamilyTag::Wheel: return "wheel:" + std::to_string(n);
        case FamilyTag::JoinCompleteCycle: return "join:" + std::to_string(m) + "," + std::to_string(n);
    }
    return {};
}

Graph build_family(const GraphFamily& family) {
    const std::size_t n = family.n;
    switch (family.tag) {
        case FamilyTag::Cycle: {
            if (n < 1) throw DomainError("Cycle needs n >= 1");
            return Graph::from_edges(n, cycle_edges(n, 0));
        }
        case FamilyTag::Path: {
            if (n < 1) throw DomainError("Path needs n >= 1");
            std::vector<Edge> edges;
            for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
            return Graph::from_edges(n, edges);
        }
        case FamilyTag::Complete: {
            if (n < 1) throw DomainError("Complete needs n >= 1");
            std::vector<Edge> edges;
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = i + 1; j < n; ++j) edges.emplace_back(i, j);
            }
            return Graph::from_edges(n, edges);
        }
        case FamilyTag::Wheel: {
            if (n < 4) throw DomainError("Wheel needs n >= 4, got " + std::to_string(n));
            return join(Graph(1), build_family(GraphFamily::cycle(n - 1)));
        }
        case FamilyTag::JoinCompleteCycle: {
            if (family.m < 1 || n < 1) throw DomainError("JoinCompleteCycle needs m >= 1 and n >= 1");
            return join(build_family(GraphFamily::complete(family.m)), build_family(GraphFamily::cycle(n)));
        }
    }
    throw DomainError("unknown family tag");
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    const std::size_t shift = g.order();
    std::vector<Edge> edges = g.edges();
    for (const auto& [u, v] : h.edges()) edges.emplace_back(u + shift, v + shift);
    return Graph::from_edges(g.order() + h.order(), edges);
}

Graph join(const Graph& g, const Graph& h) {
    const std::size_t shift = g.order();
    std::vector<Edge> edges = g.edges();
    for (const auto& [u, v] : h.edges()) edges.emplace_back(u + shift, v + shift);
    for (std::size_t u = 0; u < g.order(); ++u) {
        for (std::size_t v = 0; v < h.order(); ++v) edges.emplace_back(u, v + shift);
    }
    return Graph::from_edges(g.order() + h.order(), edges);
}

}  // namespace dompoly
