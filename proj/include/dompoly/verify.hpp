#pragma once

#include "dompoly/classify.hpp"
#include "dompoly/graph.hpp"
#include "dompoly/graph6.hpp"
#include "dompoly/oracle.hpp"
#include "dompoly/report.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>

namespace dompoly {

struct VerifyOptions {
    unsigned threads = 0;
    std::size_t guard = kDefaultEnumerationGuard;
    std::uint64_t seed = 0x5eed;
};

/// b_1 .. b_30 modulo 9 as published alongside the ord_3 table.
inline constexpr std::array<unsigned, 30> kPublishedBMod9 = {1, 1, 3, 3, 7, 6, 2, 7, 3, 7, 7, 3, 3, 4, 6,
                                                             5, 4, 3, 4, 4, 3, 3, 1, 6, 8, 1, 3, 1, 1, 3};

/// Which derivative at -1 rules a residue case out.
enum class CaseContradiction { FirstDerivative, SecondDerivative };

/// One row of the residue table for C_n = C_{n1} u C_{n2} u C_{n3}.
struct ResidueCase {
    int index;                          // 1..10
    unsigned n_mod4;                    // n mod 4
    std::array<unsigned, 3> part_mod4;  // part residues mod 4, sorted ascending
    CaseContradiction contradiction;
};

const std::array<ResidueCase, 10>& residue_case_table();

/// Row matching the residues of (n1, n2, n3) and their sum, if any.
std::optional<ResidueCase> classify_residue_case(std::size_t n1, std::size_t n2, std::size_t n3);

/// The two readings of "two new vertices joined to two adjacent vertices of C_{n-2}".
enum class PathCompanion {
    PendantPair,  // new vertex n-2 adjacent to cycle vertex 0, new vertex n-1 adjacent to cycle vertex 1
    SharedPair,   // both new vertices adjacent to cycle vertices 0 and 1
};

/// C_{n-2} on 0..n-3 plus the two new vertices n-2, n-1. Requires n >= 5.
Graph path_companion(std::size_t n, PathCompanion variant);

/// D(G u H) against D(G) D(H) on `pairs` random pairs of order 1..max_order.
VerificationReport verify_union_product(std::size_t pairs, std::size_t max_order, const VerifyOptions& options = {});

/// Brute-force D(C_n) against the recurrence for 1 <= n <= n_max.
VerificationReport verify_cycle_recurrence(std::size_t n_max, const VerifyOptions& options = {});

/// gamma(C_n) = ceil(n/3) by oracle (n <= min(n_max, 15)); lowest degree of D(C_n) is
/// ceil(n/3) up to n_max; cycle unions of order <= 20 have lowest degree equal to the
/// sum of part ceilings; any union matching D(C_n) (n <= n_max) satisfies the ceiling identity.
VerificationReport verify_gamma_additivity_and_ceiling(std::size_t n_max, const VerifyOptions& options = {});

/// Closed form, recurrence and evaluation of D^(k)(C_n, -1) agree for 1 <= n <= n_max.
VerificationReport verify_alpha(std::size_t n_max);
VerificationReport verify_beta(std::size_t n_max);
VerificationReport verify_theta(std::size_t n_max);

/// For 1 <= n <= n_max: ord_3 a_n equals the classification, b_n from its recurrence equals
/// a_n / ((-1)^n 3^ceil(n/3)), and 9 does not divide b_n. a_n is also checked against
/// D(C_n, -3) for n <= 200.
VerificationReport verify_ord3(std::size_t n_max);

/// b_1..b_30 mod 9 against the published vector and b_{t+27} = b_t (mod 9) for t <= t_max.
VerificationReport verify_remark_table(std::size_t t_max);

/// Only the one-part partition {n} (parts >= 3) reproduces D(C_n, x). Requires n >= 3.
VerificationReport verify_cycle_uniqueness(std::size_t n, const VerifyOptions& options = {});

/// verify_cycle_uniqueness for every n in [lo, hi], merged.
VerificationReport verify_cycle_uniqueness_range(std::size_t lo, std::size_t hi, const VerifyOptions& options = {});

/// Every triple of parts >= 3 with sum <= n_max: alpha-compatible triples must fall in the
/// residue table and be contradicted by the derivative the table names; no triple's product
/// equals D(C_n). Requires n_max >= 9.
VerificationReport verify_ten_case_table(std::size_t n_max);

/// C_n is alone in its class among the corpus graphs of order n. Also checks, over every
/// class, that a k-regular member with distinct closed neighbourhoods forces all members
/// to be k-regular.
VerificationReport verify_cycle_class(std::size_t n, std::span<const Graph6Record> corpus, const VerifyOptions& options = {});

/// W_n is alone in its class among the corpus graphs of order n; 4 <= n <= guard.
VerificationReport verify_wheel_uniqueness(std::size_t n, std::span<const Graph6Record> corpus, const VerifyOptions& options = {});

/// The class of P_n among corpus graphs of order n has two members, and the companion
/// construction that reproduces D(P_n) is identified. n = 0 (mod 3), n >= 6.
VerificationReport verify_path_class(std::size_t n, std::span<const Graph6Record> corpus, const VerifyOptions& options = {});

}  // namespace dompoly
