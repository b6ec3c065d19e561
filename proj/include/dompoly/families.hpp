#pragma once

#include "dompoly/graph.hpp"

#include <cstddef>
#include <string>
#include <string_view>

namespace dompoly {

enum class FamilyTag { Cycle, Path, Complete, Wheel, JoinCompleteCycle };

/// A named graph family with its parameters.
///
/// Vertex numbering of the built graphs is fixed:
///   Cycle(n)     0..n-1 in cyclic order; Cycle(1) = K1, Cycle(2) = K2.
///   Path(n)      0..n-1 along the path.
///   Complete(n)  0..n-1.
///   Wheel(n)     hub 0, rim 1..n-1 in cyclic order (K1 join C_{n-1}), n >= 4.
///   JoinCompleteCycle(m, n)  K_m on 0..m-1, then C_n on m..m+n-1.
struct GraphFamily {
    FamilyTag tag = FamilyTag::Cycle;
    std::size_t n = 1;
    std::size_t m = 0;  // JoinCompleteCycle only

    static GraphFamily cycle(std::size_t n) { return {FamilyTag::Cycle, n, 0}; }
    static GraphFamily path(std::size_t n) { return {FamilyTag::Path, n, 0}; }
    static GraphFamily complete(std::size_t n) { return {FamilyTag::Complete, n, 0}; }
    static GraphFamily wheel(std::size_t n) { return {FamilyTag::Wheel, n, 0}; }
    static GraphFamily join_complete_cycle(std::size_t m, std::size_t n) { return {FamilyTag::JoinCompleteCycle, n, m}; }

    /// Parses "cycle:7", "path:6", "complete:5", "wheel:6" or "join:M,N" (K_M join C_N).
    static GraphFamily parse(std::string_view spec);

    /// Inverse of parse.
    std::string to_string() const;

    friend bool operator==(const GraphFamily&, const GraphFamily&) = default;
};

/// Throws DomainError when the parameters violate the family's domain.
Graph build_family(const GraphFamily& family);

/// h's vertices follow g's, shifted by g.order().
Graph disjoint_union(const Graph& g, const Graph& h);

/// Disjoint union plus every edge between the two sides; g's vertices come first.
Graph join(const Graph& g, const Graph& h);

}  // namespace dompoly
