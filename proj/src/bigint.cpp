#include "dompoly/bigint.hpp"

#include "dompoly/errors.hpp"

namespace dompoly {

std::string to_decimal(const BigInt& value) { return value.get_str(10); }

BigInt parse_decimal(std::string_view text) {
    std::string_view digits = text;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
    if (digits.empty()) throw DomainError("empty integer literal");
    for (char c : digits) {
        if (c < '0' || c > '9') throw DomainError("not a decimal integer: '" + std::string(text) + "'");
    }
    std::string normalized(text.front() == '+' ? text.substr(1) : text);
    return BigInt(normalized, 10);
}

BigInt power(unsigned long base, unsigned long exponent) {
    BigInt result;
    mpz_ui_pow_ui(result.get_mpz_t(), base, exponent);
    return result;
}

namespace {

bool is_small_prime(unsigned long p) {
    if (p < 2) return false;
    for (unsigned long d = 2; d * d <= p; ++d) {
        if (p % d == 0) return false;
    }
    return true;
}

}  // namespace

unsigned long ord_p(const BigInt& n, unsigned long p) {
    if (p < 2 || (p <= 100 && !is_small_prime(p))) {
        throw DomainError("ord_p needs a prime modulus, got " + std::to_string(p));
    }
    if (sgn(n) == 0) throw UndefinedValuationError("ord_p(0) is undefined");
    BigInt stripped;
    BigInt prime(p);
    return mpz_remove(stripped.get_mpz_t(), n.get_mpz_t(), prime.get_mpz_t());
}

unsigned long mod_floor(const BigInt& value, unsigned long modulus) {
    if (modulus == 0) throw DomainError("modulus must be positive");
    return mpz_fdiv_ui(value.get_mpz_t(), modulus);
}

}  // namespace dompoly
