#pragma once

// Reference dominating-set counter for tests. Walks every subset with an
// explicit membership vector and checks each vertex through Graph::adjacent,
// sharing no code with the library's bitmask enumeration.

#include "dompoly/graph.hpp"

#include <cstdint>
#include <vector>

namespace dompoly::testing {

inline std::vector<std::uint64_t> naive_domination_counts(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<std::uint64_t> counts(n + 1, 0);
    std::vector<bool> chosen(n, false);
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << n); ++code) {
        std::size_t size = 0;
        for (std::size_t v = 0; v < n; ++v) {
            chosen[v] = ((code >> v) & 1U) != 0;
            size += chosen[v];
        }
        bool dominates = true;
        for (std::size_t v = 0; v < n && dominates; ++v) {
            bool covered = chosen[v];
            for (std::size_t u = 0; u < n && !covered; ++u) covered = chosen[u] && g.adjacent(u, v);
            dominates = covered;
        }
        if (dominates) ++counts[size];
    }
    return counts;
}

}  // namespace dompoly::testing
