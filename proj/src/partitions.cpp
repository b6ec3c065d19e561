#include "dompoly/partitions.hpp"

#include "dompoly/cycle_family.hpp"
#include "dompoly/errors.hpp"
#include "dompoly/parallel.hpp"

#include <algorithm>
#include <numeric>

namespace dompoly {

namespace {

void check_min_part(std::size_t min_part) {
    if (min_part != 1 && min_part != 3) throw DomainError("min_part must be 1 or 3");
}

// Extends `parts` with every partition of `remaining` into parts in [min_part, max_part].
template <typename Visit>
void extend(std::vector<std::size_t>& parts, std::size_t remaining, std::size_t max_part, std::size_t min_part,
            Visit& visit) {
    if (remaining == 0) {
        visit(parts);
        return;
    }
    for (std::size_t p = std::min(remaining, max_part); p >= min_part; --p) {
        parts.push_back(p);
        extend(parts, remaining - p, p, min_part, visit);
        parts.pop_back();
    }
}

}  // namespace

std::size_t CyclePartition::order() const { return std::accumulate(parts.begin(), parts.end(), std::size_t{0}); }

std::string CyclePartition::to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(parts[i]);
    }
    return out + "}";
}

void for_each_partition(std::size_t n, std::size_t min_part, const std::function<void(const CyclePartition&)>& visit) {
    check_min_part(min_part);
    if (n == 0) throw DomainError("partitions are enumerated for n >= 1");
    CyclePartition current{{}, min_part};
    auto emit = [&](const std::vector<std::size_t>& parts) {
        current.parts = parts;
        visit(current);
    };
    std::vector<std::size_t> parts;
    extend(parts, n, n, min_part, emit);
}

std::vector<CyclePartition> enumerate_partitions(std::size_t n, std::size_t min_part) {
    std::vector<CyclePartition> out;
    for_each_partition(n, min_part, [&](const CyclePartition& p) { out.push_back(p); });
    return out;
}

IntPolynomial partition_polynomial(const CyclePartition& partition) {
    IntPolynomial product = IntPolynomial::constant(1);
    for (std::size_t part : partition.parts) product = product * cycle_polynomial(part);
    return product;
}

std::optional<std::size_t> first_difference(const IntPolynomial& p, const IntPolynomial& q) {
    const std::size_t len = std::max(p.coefficients().size(), q.coefficients().size());
    for (std::size_t i = 0; i < len; ++i) {
        if (p.coefficient(i) != q.coefficient(i)) return i;
    }
    return std::nullopt;
}

std::vector<PartitionComparison> search_partitions(std::size_t n, std::size_t min_part, unsigned threads) {
    check_min_part(min_part);
    if (n == 0) throw DomainError("partitions are enumerated for n >= 1");
    const IntPolynomial target = cycle_polynomial(n);
    // Warm the shared cache so workers only read it.
    for (std::size_t k = 1; k <= n; ++k) (void)cycle_polynomial(k);

    // One task per largest part, from n down to min_part.
    const std::size_t tasks = n - min_part + 1;
    std::vector<std::vector<PartitionComparison>> buckets(tasks);
    parallel_for(tasks, threads, [&](std::size_t task) {
        const std::size_t largest = n - task;
        std::vector<std::size_t> parts{largest};
        // Prefix products along the recursion avoid recomputing shared factors.
        std::vector<IntPolynomial> prefix{cycle_polynomial(largest)};
        auto& out = buckets[task];
        auto descend = [&](auto&& self, std::size_t remaining, std::size_t max_part) -> void {
            if (remaining == 0) {
                out.push_back({CyclePartition{parts, min_part}, prefix.back(), first_difference(prefix.back(), target)});
                return;
            }
            for (std::size_t p = std::min(remaining, max_part); p >= min_part; --p) {
                parts.push_back(p);
                prefix.push_back(prefix.back() * cycle_polynomial(p));
                self(self, remaining - p, p);
                prefix.pop_back();
                parts.pop_back();
            }
        };
        descend(descend, n - largest, largest);
    });

    std::vector<PartitionComparison> out;
    for (auto& bucket : buckets) std::move(bucket.begin(), bucket.end(), std::back_inserter(out));
    return out;
}

}  // namespace dompoly
