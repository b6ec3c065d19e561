#pragma once

#include "dompoly/polynomial.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace dompoly {

/// Cycle lengths of a disjoint union of cycles, non-increasing.
struct CyclePartition {
    std::vector<std::size_t> parts;
    std::size_t min_part = 3;

    std::size_t order() const;

    /// "{4,3}"
    std::string to_string() const;

    friend bool operator==(const CyclePartition&, const CyclePartition&) = default;
};

/// Calls `visit` once per partition of n into parts >= min_part (1 or 3),
/// in decreasing lexicographic order: {9}, {6,3}, {5,4}, {3,3,3}.
void for_each_partition(std::size_t n, std::size_t min_part, const std::function<void(const CyclePartition&)>& visit);

std::vector<CyclePartition> enumerate_partitions(std::size_t n, std::size_t min_part);

/// Product of D(C_k, x) over the parts (Cycle(1) = K1, Cycle(2) = K2).
IntPolynomial partition_polynomial(const CyclePartition& partition);

struct PartitionComparison {
    CyclePartition partition;
    IntPolynomial polynomial;
    /// Lowest degree where the partition's polynomial differs from D(C_n); empty on a match.
    std::optional<std::size_t> first_difference;

    bool matches() const { return !first_difference.has_value(); }
};

/// Compares every partition polynomial of n against D(C_n, x).
/// Work is split by largest part; output order equals enumeration order.
std::vector<PartitionComparison> search_partitions(std::size_t n, std::size_t min_part, unsigned threads = 0);

/// Lowest index where two polynomials differ; empty if equal.
std::optional<std::size_t> first_difference(const IntPolynomial& p, const IntPolynomial& q);

}  // namespace dompoly
