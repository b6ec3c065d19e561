#pragma once

#include "dompoly/graph.hpp"
#include "dompoly/polynomial.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace dompoly {

inline constexpr std::size_t kDefaultEnumerationGuard = 24;

/// Subset masks are 64-bit; no guard override goes past this.
inline constexpr std::size_t kMaxEnumerableOrder = 62;

struct OracleOptions {
    /// Largest order enumerated (per component when factor_components is set).
    std::size_t guard = kDefaultEnumerationGuard;
    /// Worker hint, 0 = hardware concurrency.
    unsigned threads = 0;
    /// Number of contiguous subset ranges; 0 picks one per worker. Never changes the result.
    std::size_t chunks = 0;
    /// Enumerate each connected component separately and multiply the results.
    bool factor_components = false;
};

/// d(G,1..n): entry i-1 is the number of dominating sets of size i.
struct DominationProfile {
    std::size_t order = 0;
    std::vector<BigInt> counts;

    BigInt count(std::size_t size) const { return size >= 1 && size <= counts.size() ? counts[size - 1] : BigInt(0); }

    /// Sum of count(i) x^i; the constant 1 for the null graph.
    IntPolynomial polynomial() const;

    friend bool operator==(const DominationProfile&, const DominationProfile&) = default;
};

/// gamma(G); empty for the null graph, which has no dominating vertex.
struct DominationNumber {
    std::optional<std::size_t> gamma;

    bool undominatable() const noexcept { return !gamma.has_value(); }

    friend bool operator==(const DominationNumber&, const DominationNumber&) = default;
};

/// Counts dominating sets of every size by enumerating all vertex subsets.
/// Throws SizeGuardError when the order is above options.guard.
DominationProfile domination_profile(const Graph& g, const OracleOptions& options = {});

/// D(G,x) by subset enumeration; the null graph maps to the constant 1.
IntPolynomial domination_polynomial(const Graph& g, const OracleOptions& options = {});

/// Smallest dominating set size, trying subset sizes in ascending order.
DominationNumber domination_number(const Graph& g, const OracleOptions& options = {});

}  // namespace dompoly
