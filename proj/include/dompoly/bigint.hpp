#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace dompoly {

using BigInt = mpz_class;

std::string to_decimal(const BigInt& value);

/// Parses an optionally signed decimal integer; throws DomainError on bad input.
BigInt parse_decimal(std::string_view text);

BigInt power(unsigned long base, unsigned long exponent);

/// p-adic valuation: the largest a with p^a | n.
/// Primality of p is the caller's contract; it is checked for p <= 100.
unsigned long ord_p(const BigInt& n, unsigned long p);

/// Non-negative residue of `value` modulo `modulus` (> 0).
unsigned long mod_floor(const BigInt& value, unsigned long modulus);

}  // namespace dompoly
