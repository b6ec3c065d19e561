#include "dompoly/cycle_family.hpp"

#include "dompoly/errors.hpp"

#include <string>

namespace dompoly {

namespace {

void require_positive(std::size_t n, const char* what) {
    if (n == 0) throw DomainError(std::string(what) + " is defined for n >= 1");
}

BigInt signed_count(std::size_t n) { return BigInt(static_cast<unsigned long>(n)); }

}  // namespace

CycleSequenceCache::CycleSequenceCache() {
    polys_ = {IntPolynomial{}, IntPolynomial{0, 1}, IntPolynomial{0, 2, 1}, IntPolynomial{0, 3, 3, 1}};
    a_ = {0, -3, 3, -9};
    b_ = {0, 1, 1, 3};
    for (std::size_t n = 1; n <= 3; ++n) {
        alpha_.resize(n + 1);
        beta_.resize(n + 1);
        theta_.resize(n + 1);
        alpha_[n] = eval_int(polys_[n], -1);
        beta_[n] = eval_int(derivative(polys_[n]), -1);
        theta_[n] = eval_int(derivative(polys_[n], 2), -1);
    }
}

void CycleSequenceCache::extend_polynomials(std::size_t n) {
    while (polys_.size() <= n) {
        const std::size_t k = polys_.size();
        polys_.push_back(scale_shift(polys_[k - 1] + polys_[k - 2] + polys_[k - 3]));
    }
}

void CycleSequenceCache::extend_a(std::size_t n) {
    while (a_.size() <= n) {
        const std::size_t k = a_.size();
        a_.push_back(-3 * (a_[k - 1] + a_[k - 2] + a_[k - 3]));
    }
}

void CycleSequenceCache::extend_b(std::size_t n) {
    while (b_.size() <= n) {
        const std::size_t k = b_.size();
        const BigInt& b1 = b_[k - 1];
        const BigInt& b2 = b_[k - 2];
        const BigInt& b3 = b_[k - 3];
        switch (k % 3) {
            case 0: b_.push_back(3 * b1 - 3 * b2 + b3); break;
            case 1: b_.push_back(b1 - b2 + b3); break;
            default: b_.push_back(3 * b1 - b2 + b3); break;
        }
    }
}

void CycleSequenceCache::extend_derivatives(std::size_t n) {
    while (alpha_.size() <= n) {
        const std::size_t k = alpha_.size();
        BigInt a = -(alpha_[k - 1] + alpha_[k - 2] + alpha_[k - 3]);
        BigInt b = -(a + beta_[k - 1] + beta_[k - 2] + beta_[k - 3]);
        BigInt t = -2 * a - 2 * b - (theta_[k - 1] + theta_[k - 2] + theta_[k - 3]);
        alpha_.push_back(std::move(a));
        beta_.push_back(std::move(b));
        theta_.push_back(std::move(t));
    }
}

IntPolynomial CycleSequenceCache::polynomial(std::size_t n) {
    require_positive(n, "D(C_n, x)");
    std::lock_guard guard(mutex_);
    extend_polynomials(n);
    return polys_[n];
}

BigInt CycleSequenceCache::a(std::size_t n) {
    require_positive(n, "a_n");
    std::lock_guard guard(mutex_);
    extend_a(n);
    return a_[n];
}

BigInt CycleSequenceCache::b(std::size_t n) {
    require_positive(n, "b_n");
    std::lock_guard guard(mutex_);
    extend_b(n);
    return b_[n];
}

BigInt CycleSequenceCache::alpha(std::size_t n) {
    require_positive(n, "alpha_n");
    std::lock_guard guard(mutex_);
    extend_derivatives(n);
    return alpha_[n];
}

BigInt CycleSequenceCache::beta(std::size_t n) {
    require_positive(n, "beta_n");
    std::lock_guard guard(mutex_);
    extend_derivatives(n);
    return beta_[n];
}

BigInt CycleSequenceCache::theta(std::size_t n) {
    require_positive(n, "theta_n");
    std::lock_guard guard(mutex_);
    extend_derivatives(n);
    return theta_[n];
}

CycleSequenceCache& shared_cycle_cache() {
    static CycleSequenceCache cache;
    return cache;
}

IntPolynomial cycle_polynomial(std::size_t n) { return shared_cycle_cache().polynomial(n); }

BigInt alpha(std::size_t n) {
    require_positive(n, "alpha_n");
    return n % 4 == 0 ? BigInt(3) : BigInt(-1);
}

BigInt beta(std::size_t n) {
    require_positive(n, "beta_n");
    switch (n % 4) {
        case 0: return -signed_count(n);
        case 1: return signed_count(n);
        default: return 0;
    }
}

BigInt theta(std::size_t n) {
    require_positive(n, "theta_n");
    const BigInt m = signed_count(n);
    switch (n % 4) {
        case 0: return m * (m - 4) / 4;
        case 1: return -(m * (m - 1) / 2);
        case 2: return m * (m + 2) / 4;
        default: return 0;
    }
}

BigInt alpha_recurrence(std::size_t n) { return shared_cycle_cache().alpha(n); }
BigInt beta_recurrence(std::size_t n) { return shared_cycle_cache().beta(n); }
BigInt theta_recurrence(std::size_t n) { return shared_cycle_cache().theta(n); }

BigInt a_seq(std::size_t n) { return shared_cycle_cache().a(n); }

BigInt b_seq(std::size_t n) { return shared_cycle_cache().b(n); }

BigInt b_seq_by_factoring(std::size_t n) {
    const BigInt a = a_seq(n);
    BigInt divisor = power(3, ceil_third(n));
    if (n % 2 == 1) divisor = -divisor;
    if (!mpz_divisible_p(a.get_mpz_t(), divisor.get_mpz_t())) {
        throw InconsistencyError("3^ceil(n/3) does not divide a_n for n = " + std::to_string(n));
    }
    BigInt quotient;
    mpz_divexact(quotient.get_mpz_t(), a.get_mpz_t(), divisor.get_mpz_t());
    return quotient;
}

Ord3Class ord3_classification(std::size_t n) {
    require_positive(n, "ord_3 classification");
    Ord3Class result;
    result.n = n;
    result.residue_class = static_cast<unsigned>(n % 3);
    result.remark_exceptional = is_ord3_exceptional(n);
    result.predicted_ord = ceil_third(n);
    if (result.residue_class == 0 || (result.residue_class == 1 && result.remark_exceptional)) ++result.predicted_ord;
    return result;
}

}  // namespace dompoly
