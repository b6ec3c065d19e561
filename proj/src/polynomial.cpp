#include "dompoly/polynomial.hpp"

#include <algorithm>
#include <utility>

namespace dompoly {

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coefficients) {
    coeffs_.reserve(coefficients.size());
    for (long c : coefficients) coeffs_.emplace_back(c);
    trim();
}

IntPolynomial IntPolynomial::constant(const BigInt& value) { return IntPolynomial(std::vector<BigInt>{value}); }

IntPolynomial IntPolynomial::monomial(const BigInt& coefficient, std::size_t degree) {
    std::vector<BigInt> coeffs(degree + 1);
    coeffs[degree] = coefficient;
    return IntPolynomial(std::move(coeffs));
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

std::optional<std::size_t> IntPolynomial::degree() const noexcept {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
}

std::optional<std::size_t> IntPolynomial::lowest_degree() const noexcept {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (sgn(coeffs_[i]) != 0) return i;
    }
    return std::nullopt;
}

BigInt IntPolynomial::coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

std::vector<std::string> IntPolynomial::decimal_coefficients() const {
    std::vector<std::string> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(to_decimal(c));
    return out;
}

std::string IntPolynomial::key() const {
    std::string out;
    for (const auto& c : coeffs_) {
        out += to_decimal(c);
        out += ',';
    }
    return out;
}

std::string IntPolynomial::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const BigInt& c = coeffs_[i];
        if (sgn(c) == 0) continue;
        BigInt magnitude = abs(c);
        if (out.empty()) {
            if (sgn(c) < 0) out += "-";
        } else {
            out += sgn(c) < 0 ? " - " : " + ";
        }
        if (i == 0 || magnitude != 1) out += to_decimal(magnitude);
        if (i >= 1) out += "x";
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& other) {
    if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& other) {
    if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    trim();
    return *this;
}

IntPolynomial operator*(const IntPolynomial& lhs, const IntPolynomial& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    std::vector<BigInt> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (sgn(lhs.coeffs_[i]) == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            mpz_addmul(out[i + j].get_mpz_t(), lhs.coeffs_[i].get_mpz_t(), rhs.coeffs_[j].get_mpz_t());
        }
    }
    return IntPolynomial(std::move(out));
}

std::strong_ordering operator<=>(const IntPolynomial& lhs, const IntPolynomial& rhs) {
    if (auto c = lhs.coeffs_.size() <=> rhs.coeffs_.size(); c != 0) return c;
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        int c = cmp(lhs.coeffs_[i], rhs.coeffs_[i]);
        if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

IntPolynomial add(const IntPolynomial& p, const IntPolynomial& q) { return p + q; }

IntPolynomial mul(const IntPolynomial& p, const IntPolynomial& q) { return p * q; }

IntPolynomial scale_shift(const IntPolynomial& p) {
    if (p.is_zero()) return {};
    std::vector<BigInt> out;
    out.reserve(p.coefficients().size() + 1);
    out.emplace_back(0);
    out.insert(out.end(), p.coefficients().begin(), p.coefficients().end());
    return IntPolynomial(std::move(out));
}

BigInt eval_int(const IntPolynomial& p, const BigInt& t) {
    BigInt acc = 0;
    const auto& c = p.coefficients();
    for (std::size_t i = c.size(); i-- > 0;) {
        acc *= t;
        acc += c[i];
    }
    return acc;
}

IntPolynomial derivative(const IntPolynomial& p) {
    const auto& c = p.coefficients();
    if (c.size() <= 1) return {};
    std::vector<BigInt> out(c.size() - 1);
    for (std::size_t i = 1; i < c.size(); ++i) out[i - 1] = c[i] * static_cast<unsigned long>(i);
    return IntPolynomial(std::move(out));
}

IntPolynomial derivative(const IntPolynomial& p, unsigned order) {
    IntPolynomial out = p;
    for (unsigned k = 0; k < order && !out.is_zero(); ++k) out = derivative(out);
    return out;
}

}  // namespace dompoly
