#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace dompoly {

/// Fixed-universe bitset over vertex indices 0..universe-1.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

    std::size_t universe() const noexcept { return universe_; }

    bool contains(std::size_t v) const noexcept { return v < universe_ && ((words_[v / 64] >> (v % 64)) & 1U) != 0; }
    void insert(std::size_t v) noexcept { words_[v / 64] |= std::uint64_t{1} << (v % 64); }
    void erase(std::size_t v) noexcept { words_[v / 64] &= ~(std::uint64_t{1} << (v % 64)); }

    std::size_t count() const noexcept;
    std::vector<std::size_t> elements() const;

    std::span<const std::uint64_t> words() const noexcept { return words_; }

    /// Low 64 members as a mask. Only meaningful when universe() <= 64.
    std::uint64_t mask() const noexcept { return words_.empty() ? 0 : words_[0]; }

    VertexSet& operator|=(const VertexSet& other) noexcept;

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

using Edge = std::pair<std::size_t, std::size_t>;

/// Simple undirected graph stored as closed neighbourhoods N[v] = {v} + neighbours.
///
/// Immutable once built. The order-0 (null) graph is valid.
class Graph {
public:
    Graph() = default;

    /// Edgeless graph on n vertices.
    explicit Graph(std::size_t n);

    /// Throws DomainError on a loop or an endpoint >= n. Repeated edges collapse.
    static Graph from_edges(std::size_t n, std::span<const Edge> edges);

    std::size_t order() const noexcept { return closed_.size(); }

    const VertexSet& closed_neighborhood(std::size_t v) const { return closed_.at(v); }
    const std::vector<VertexSet>& closed_neighborhoods() const noexcept { return closed_; }

    bool adjacent(std::size_t u, std::size_t v) const { return u != v && closed_.at(u).contains(v); }
    std::size_t degree(std::size_t v) const { return closed_.at(v).count() - 1; }
    std::size_t edge_count() const;

    /// Edges (u, v) with u < v in lexicographic order.
    std::vector<Edge> edges() const;

    /// Closed neighbourhoods as 64-bit masks; requires order() <= 64.
    std::vector<std::uint64_t> closed_masks() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<VertexSet> closed_;
};

/// Vertex lists of the connected components, each sorted, ordered by smallest vertex.
std::vector<std::vector<std::size_t>> connected_components(const Graph& g);

/// Subgraph induced on `vertices`, relabelled 0..k-1 in the given order.
Graph induced_subgraph(const Graph& g, std::span<const std::size_t> vertices);

/// True iff two distinct vertices share the same closed neighbourhood.
bool has_duplicate_closed_neighborhoods(const Graph& g);

/// Degree common to every vertex, or -1 if the graph is not regular (or null).
long regular_degree(const Graph& g);

/// Sorted (non-increasing) degree sequence.
std::vector<std::size_t> degree_sequence(const Graph& g);

/// Checks closure and symmetry of the closed-neighbourhood representation.
bool satisfies_graph_invariants(const Graph& g);

}  // namespace dompoly
