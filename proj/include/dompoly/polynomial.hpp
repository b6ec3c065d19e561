#pragma once

#include "dompoly/bigint.hpp"

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace dompoly {

/// Dense univariate polynomial over the integers.
///
/// Coefficient i is the coefficient of x^i. The stored vector never ends in a
/// zero, so the zero polynomial is the empty vector and equality is plain
/// vector equality.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coefficients);
    IntPolynomial(std::initializer_list<long> coefficients);

    static IntPolynomial constant(const BigInt& value);
    static IntPolynomial monomial(const BigInt& coefficient, std::size_t degree);
    static IntPolynomial x() { return monomial(1, 1); }

    bool is_zero() const noexcept { return coeffs_.empty(); }

    /// Degree of a nonzero polynomial; nullopt for zero.
    std::optional<std::size_t> degree() const noexcept;

    /// Index of the lowest nonzero coefficient; nullopt for zero.
    std::optional<std::size_t> lowest_degree() const noexcept;

    const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }

    /// Coefficient of x^i, zero past the degree.
    BigInt coefficient(std::size_t i) const;

    /// Coefficients as decimal strings from degree 0 upward.
    std::vector<std::string> decimal_coefficients() const;

    /// Canonical byte string: equal keys iff equal polynomials.
    std::string key() const;

    /// Human-readable form, e.g. "x^3 + 3x^2 + 3x".
    std::string to_string() const;

    IntPolynomial& operator+=(const IntPolynomial& other);
    IntPolynomial& operator-=(const IntPolynomial& other);

    friend IntPolynomial operator+(IntPolynomial lhs, const IntPolynomial& rhs) { return lhs += rhs; }
    friend IntPolynomial operator-(IntPolynomial lhs, const IntPolynomial& rhs) { return lhs -= rhs; }
    friend IntPolynomial operator*(const IntPolynomial& lhs, const IntPolynomial& rhs);

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

    /// Total order: by length, then coefficientwise from degree 0.
    friend std::strong_ordering operator<=>(const IntPolynomial& lhs, const IntPolynomial& rhs);

private:
    void trim();

    std::vector<BigInt> coeffs_;
};

IntPolynomial add(const IntPolynomial& p, const IntPolynomial& q);

/// Schoolbook convolution, O(deg p * deg q) coefficient products.
IntPolynomial mul(const IntPolynomial& p, const IntPolynomial& q);

/// x * p.
IntPolynomial scale_shift(const IntPolynomial& p);

/// Horner evaluation at an integer point.
BigInt eval_int(const IntPolynomial& p, const BigInt& t);

IntPolynomial derivative(const IntPolynomial& p);

/// k-th formal derivative.
IntPolynomial derivative(const IntPolynomial& p, unsigned order);

}  // namespace dompoly
