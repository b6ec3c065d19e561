#include "dompoly/graph.hpp"

#include "dompoly/errors.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <string>

namespace dompoly {

std::size_t VertexSet::count() const noexcept {
    std::size_t total = 0;
    for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

std::vector<std::size_t> VertexSet::elements() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < words_.size(); ++i) {
        for (std::uint64_t w = words_[i]; w != 0; w &= w - 1) {
            out.push_back(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        }
    }
    return out;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) noexcept {
    for (std::size_t i = 0; i < words_.size() && i < other.words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
}

Graph::Graph(std::size_t n) : closed_(n, VertexSet(n)) {
    for (std::size_t v = 0; v < n; ++v) closed_[v].insert(v);
}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
    Graph g(n);
    for (const auto& [u, v] : edges) {
        if (u >= n || v >= n) {
            throw DomainError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") outside a graph of order " +
                              std::to_string(n));
        }
        if (u == v) throw DomainError("self-loop at vertex " + std::to_string(u));
        g.closed_[u].insert(v);
        g.closed_[v].insert(u);
    }
    return g;
}

std::size_t Graph::edge_count() const {
    std::size_t degree_sum = 0;
    for (const auto& nb : closed_) degree_sum += nb.count() - 1;
    return degree_sum / 2;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (std::size_t u = 0; u < order(); ++u) {
        for (std::size_t v : closed_[u].elements()) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

std::vector<std::uint64_t> Graph::closed_masks() const {
    if (order() > 64) throw DomainError("closed_masks needs order <= 64");
    std::vector<std::uint64_t> out;
    out.reserve(order());
    for (const auto& nb : closed_) out.push_back(nb.mask());
    return out;
}

std::vector<std::vector<std::size_t>> connected_components(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<bool> seen(n, false);
    std::vector<std::vector<std::size_t>> components;
    std::vector<std::size_t> stack;
    for (std::size_t root = 0; root < n; ++root) {
        if (seen[root]) continue;
        std::vector<std::size_t> component;
        stack.push_back(root);
        seen[root] = true;
        while (!stack.empty()) {
            std::size_t v = stack.back();
            stack.pop_back();
            component.push_back(v);
            for (std::size_t u : g.closed_neighborhood(v).elements()) {
                if (!seen[u]) {
                    seen[u] = true;
                    stack.push_back(u);
                }
            }
        }
        std::sort(component.begin(), component.end());
        components.push_back(std::move(component));
    }
    return components;
}

Graph induced_subgraph(const Graph& g, std::span<const std::size_t> vertices) {
    std::vector<std::size_t> position(g.order(), g.order());
    for (std::size_t i = 0; i < vertices.size(); ++i) position.at(vertices[i]) = i;
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (std::size_t u : g.closed_neighborhood(vertices[i]).elements()) {
            std::size_t j = position[u];
            if (j < vertices.size() && i < j) edges.emplace_back(i, j);
        }
    }
    return Graph::from_edges(vertices.size(), edges);
}

bool has_duplicate_closed_neighborhoods(const Graph& g) {
    std::map<std::vector<std::uint64_t>, std::size_t> seen;
    for (const auto& nb : g.closed_neighborhoods()) {
        std::vector<std::uint64_t> key(nb.words().begin(), nb.words().end());
        if (!seen.emplace(std::move(key), 0).second) return true;
    }
    return false;
}

long regular_degree(const Graph& g) {
    if (g.order() == 0) return -1;
    const std::size_t d = g.degree(0);
    for (std::size_t v = 1; v < g.order(); ++v) {
        if (g.degree(v) != d) return -1;
    }
    return static_cast<long>(d);
}

std::vector<std::size_t> degree_sequence(const Graph& g) {
    std::vector<std::size_t> out;
    out.reserve(g.order());
    for (std::size_t v = 0; v < g.order(); ++v) out.push_back(g.degree(v));
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

bool satisfies_graph_invariants(const Graph& g) {
    const std::size_t n = g.order();
    for (std::size_t v = 0; v < n; ++v) {
        const auto& nb = g.closed_neighborhood(v);
        if (nb.universe() != n || !nb.contains(v)) return false;
        for (std::size_t u : nb.elements()) {
            if (u >= n || !g.closed_neighborhood(u).contains(v)) return false;
        }
    }
    return true;
}

}  // namespace dompoly
