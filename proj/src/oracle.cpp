#include "dompoly/oracle.hpp"

#include "dompoly/errors.hpp"
#include "dompoly/parallel.hpp"

#include <algorithm>
#include <bit>
#include <span>
#include <string>

namespace dompoly {

namespace {

// Below this many subset tests the work is not worth spreading over threads.
constexpr std::uint64_t kSerialWork = std::uint64_t{1} << 16;

// The low half of every subset is looked up in a table of at most 2^kMaxLowBits entries.
constexpr std::size_t kMaxLowBits = 20;

void check_guard(std::size_t n, const OracleOptions& options) {
    if (n > options.guard) {
        throw SizeGuardError("graph order " + std::to_string(n) + " exceeds the enumeration guard " +
                             std::to_string(options.guard) + "; raise it with --guard-override");
    }
    if (n > kMaxEnumerableOrder) {
        throw SizeGuardError("graph order " + std::to_string(n) + " exceeds the enumerable maximum " +
                             std::to_string(kMaxEnumerableOrder));
    }
}

std::uint64_t full_mask(std::size_t n) { return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

std::uint64_t cover_of(std::uint64_t subset, std::span<const std::uint64_t> closed, std::size_t first) {
    std::uint64_t cover = 0;
    for (; subset != 0; subset &= subset - 1) cover |= closed[first + static_cast<std::size_t>(std::countr_zero(subset))];
    return cover;
}

// counts[k] = number of k-subsets S with N[S] = V.
//
// A subset is split as (high part, low part). All covers of low parts are
// tabulated once; each high part then scans the table with an OR and a compare.
std::vector<std::uint64_t> count_dominating_subsets(std::span<const std::uint64_t> closed, const OracleOptions& options) {
    const std::size_t n = closed.size();
    const std::size_t low_bits = std::min(n / 2, kMaxLowBits);
    const std::size_t high_bits = n - low_bits;
    const std::uint64_t full = full_mask(n);

    const std::size_t low_count = std::size_t{1} << low_bits;
    std::vector<std::uint64_t> low_cover(low_count, 0);
    std::vector<unsigned char> low_size(low_count, 0);
    for (std::size_t l = 1; l < low_count; ++l) {
        const std::size_t rest = l & (l - 1);
        low_cover[l] = low_cover[rest] | closed[static_cast<std::size_t>(std::countr_zero(l))];
        low_size[l] = static_cast<unsigned char>(low_size[rest] + 1);
    }

    const std::uint64_t high_count = std::uint64_t{1} << high_bits;
    std::uint64_t chunk_count = options.chunks;
    if (chunk_count == 0) {
        chunk_count = (high_count * low_count <= kSerialWork) ? 1 : std::uint64_t{resolve_threads(options.threads)} * 4;
    }
    chunk_count = std::clamp<std::uint64_t>(chunk_count, 1, high_count);

    auto scan = [&](std::size_t chunk) {
        std::vector<std::uint64_t> counts(n + 1, 0);
        const std::uint64_t begin = high_count * chunk / chunk_count;
        const std::uint64_t end = high_count * (chunk + 1) / chunk_count;
        for (std::uint64_t h = begin; h < end; ++h) {
            const std::uint64_t high_cover = cover_of(h, closed, low_bits);
            const auto high_size = static_cast<std::size_t>(std::popcount(h));
            std::uint64_t* row = counts.data() + high_size;
            for (std::size_t l = 0; l < low_count; ++l) {
                row[low_size[l]] += static_cast<std::uint64_t>((high_cover | low_cover[l]) == full);
            }
        }
        return counts;
    };
    auto merge = [](std::vector<std::uint64_t>& acc, const std::vector<std::uint64_t>& part) {
        for (std::size_t k = 0; k < acc.size(); ++k) acc[k] += part[k];
    };
    return parallel_map_reduce(static_cast<std::size_t>(chunk_count), options.threads, std::vector<std::uint64_t>(n + 1, 0),
                               scan, merge);
}

IntPolynomial raw_polynomial(const Graph& g, const OracleOptions& options) {
    check_guard(g.order(), options);
    if (g.order() == 0) return IntPolynomial::constant(1);
    const auto closed = g.closed_masks();
    const auto counts = count_dominating_subsets(closed, options);
    std::vector<BigInt> coeffs(counts.size());
    for (std::size_t k = 0; k < counts.size(); ++k) mpz_set_ui(coeffs[k].get_mpz_t(), counts[k]);
    return IntPolynomial(std::move(coeffs));
}

std::optional<std::size_t> raw_domination_number(const Graph& g, const OracleOptions& options) {
    check_guard(g.order(), options);
    const std::size_t n = g.order();
    if (n == 0) return std::nullopt;
    const auto closed = g.closed_masks();
    const std::uint64_t full = full_mask(n);
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::size_t k = 1; k <= n; ++k) {
        // Gosper's hack walks the k-subsets in increasing numeric order.
        for (std::uint64_t s = (std::uint64_t{1} << k) - 1; s < limit;) {
            if (cover_of(s, closed, 0) == full) return k;
            const std::uint64_t low = s & (~s + 1);
            const std::uint64_t ripple = s + low;
            s = (((ripple ^ s) >> 2) / low) | ripple;
        }
    }
    return n;
}

}  // namespace

IntPolynomial DominationProfile::polynomial() const {
    if (order == 0) return IntPolynomial::constant(1);
    std::vector<BigInt> coeffs;
    coeffs.reserve(counts.size() + 1);
    coeffs.emplace_back(0);
    coeffs.insert(coeffs.end(), counts.begin(), counts.end());
    return IntPolynomial(std::move(coeffs));
}

IntPolynomial domination_polynomial(const Graph& g, const OracleOptions& options) {
    if (!options.factor_components) return raw_polynomial(g, options);
    IntPolynomial product = IntPolynomial::constant(1);
    for (const auto& component : connected_components(g)) {
        product = product * raw_polynomial(induced_subgraph(g, component), options);
    }
    return product;
}

DominationProfile domination_profile(const Graph& g, const OracleOptions& options) {
    const IntPolynomial poly = domination_polynomial(g, options);
    DominationProfile profile{g.order(), std::vector<BigInt>(g.order())};
    for (std::size_t i = 1; i <= g.order(); ++i) profile.counts[i - 1] = poly.coefficient(i);
    return profile;
}

DominationNumber domination_number(const Graph& g, const OracleOptions& options) {
    if (!options.factor_components) return {raw_domination_number(g, options)};
    if (g.order() == 0) return {};
    std::size_t total = 0;
    for (const auto& component : connected_components(g)) {
        total += *raw_domination_number(induced_subgraph(g, component), options);
    }
    return {total};
}

}  // namespace dompoly
