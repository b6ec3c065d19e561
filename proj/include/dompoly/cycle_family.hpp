#pragma once

#include "dompoly/bigint.hpp"
#include "dompoly/polynomial.hpp"

#include <cstddef>
#include <mutex>
#include <vector>

namespace dompoly {

/// Memoised cycle sequences, all indexed from n = 1.
///
///   polynomial(n)  D(C_n, x) via D(C_n) = x (D(C_{n-1}) + D(C_{n-2}) + D(C_{n-3}))
///   a(n)           D(C_n, -3) via a_n = -3 (a_{n-1} + a_{n-2} + a_{n-3})
///   b(n)           a_n / ((-1)^n 3^ceil(n/3)), via its own three-branch recurrence
///   alpha/beta/theta(n)  D, D', D'' at -1, via their recurrences
///
/// Base cases come from C_1 = K_1, C_2 = K_2 and C_3 = K_3. The cache only
/// grows; every accessor locks, so one instance can be shared by threads.
class CycleSequenceCache {
public:
    CycleSequenceCache();

    IntPolynomial polynomial(std::size_t n);
    BigInt a(std::size_t n);
    BigInt b(std::size_t n);
    BigInt alpha(std::size_t n);
    BigInt beta(std::size_t n);
    BigInt theta(std::size_t n);

private:
    void extend_polynomials(std::size_t n);
    void extend_a(std::size_t n);
    void extend_b(std::size_t n);
    void extend_derivatives(std::size_t n);

    std::mutex mutex_;
    // Index 0 is unused so that entry n holds the value for C_n.
    std::vector<IntPolynomial> polys_;
    std::vector<BigInt> a_;
    std::vector<BigInt> b_;
    std::vector<BigInt> alpha_;
    std::vector<BigInt> beta_;
    std::vector<BigInt> theta_;
};

/// Process-wide cache used by the free functions below.
CycleSequenceCache& shared_cycle_cache();

/// D(C_n, x); n >= 1, else DomainError.
IntPolynomial cycle_polynomial(std::size_t n);

/// D(C_n, -1) in closed form: 3 if 4 | n, else -1.
BigInt alpha(std::size_t n);

/// D'(C_n, -1) in closed form: -n if n = 0 (mod 4), n if n = 1 (mod 4), else 0.
BigInt beta(std::size_t n);

/// D''(C_n, -1) in closed form: n(n-4)/4, -n(n-1)/2, n(n+2)/4, 0 for n = 0, 1, 2, 3 (mod 4).
BigInt theta(std::size_t n);

/// The same three values from their recurrences (independent of the closed forms).
BigInt alpha_recurrence(std::size_t n);
BigInt beta_recurrence(std::size_t n);
BigInt theta_recurrence(std::size_t n);

/// a_n = D(C_n, -3) from the integer recurrence.
BigInt a_seq(std::size_t n);

/// b_n from its three-branch recurrence.
BigInt b_seq(std::size_t n);

/// b_n by dividing a_n by (-1)^n 3^ceil(n/3). Throws InconsistencyError when
/// the division is not exact.
BigInt b_seq_by_factoring(std::size_t n);

constexpr std::size_t ceil_third(std::size_t n) { return (n + 2) / 3; }

/// n mod 27 lies in {4, 13, 22}: the residues where ord_3 a_n = ceil(n/3) + 1 for n = 1 (mod 3).
constexpr bool is_ord3_exceptional(std::size_t n) {
    const std::size_t r = n % 27;
    return r == 4 || r == 13 || r == 22;
}

struct Ord3Class {
    std::size_t n = 0;
    std::size_t predicted_ord = 0;
    unsigned residue_class = 0;  // n mod 3
    bool remark_exceptional = false;
};

/// Predicted ord_3 D(C_n, -3):
///   n = 0 (mod 3): ceil(n/3) + 1
///   n = 1 (mod 3): ceil(n/3) + 1 if n mod 27 in {4, 13, 22}, else ceil(n/3)
///   n = 2 (mod 3): ceil(n/3)
Ord3Class ord3_classification(std::size_t n);

}  // namespace dompoly
