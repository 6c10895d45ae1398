#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "cfzeta/bigint.hpp"

namespace cfzeta {

/**
 * Univariate polynomial with arbitrary-precision rational coefficients,
 * stored ascending (index = degree). Canonical form: no trailing zero
 * coefficient; the zero polynomial is the empty sequence. All operations
 * are exact.
 */
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rat> coeffs);

    /// c * z^deg.
    static Polynomial monomial(const Rat& c, std::size_t deg);
    static Polynomial constant(const Rat& c);

    bool is_zero() const { return c_.empty(); }

    /// Degree, with the convention deg 0 = -1.
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    /// Coefficient of z^i (zero beyond the degree).
    const Rat& coeff(std::size_t i) const;
    const std::vector<Rat>& coeffs() const { return c_; }
    const Rat& leading() const;

    Polynomial operator+(const Polynomial& rhs) const;
    Polynomial operator-(const Polynomial& rhs) const;
    Polynomial operator*(const Polynomial& rhs) const;
    Polynomial operator-() const;
    Polynomial scaled(const Rat& c) const;
    Polynomial pow(unsigned e) const;

    bool operator==(const Polynomial& rhs) const { return c_ == rhs.c_; }
    bool operator!=(const Polynomial& rhs) const { return !(*this == rhs); }

    /// Quotient and remainder of exact division over the rationals;
    /// divisor must be nonzero.
    std::pair<Polynomial, Polynomial> divrem(const Polynomial& divisor) const;

    Polynomial derivative() const;

    Rat eval(const Rat& x) const;

    /// Substitute z -> z^m (m >= 1): coefficient i moves to index i*m.
    Polynomial substitute_power(std::size_t m) const;

    /// Substitute z -> -z.
    Polynomial alternate_signs() const;

    /// Write this = c * P with P an integer-coefficient primitive polynomial
    /// whose lowest-order nonzero coefficient is positive; returns (P, c).
    /// For the zero polynomial returns (0, 1).
    std::pair<Polynomial, Rat> primitive_integer() const;

    /// Polynomial gcd over the rationals, computed by the fraction-free
    /// subresultant remainder sequence on integer-cleared inputs. The result
    /// is primitive with positive leading coefficient (1 when coprime);
    /// gcd(0, b) is the normalized b.
    static Polynomial gcd(const Polynomial& a, const Polynomial& b);

    /// Render with the constant term first, e.g. "1 - z - z^2"; rational
    /// coefficients print parenthesized, e.g. "(1/2)z^2".
    std::string to_string(const char* var = "z") const;

private:
    void trim();

    std::vector<Rat> c_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace cfzeta
