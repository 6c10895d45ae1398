#pragma once

#include <string>

#include "cfzeta/polynomial.hpp"

namespace cfzeta {

/**
 * Quotient of two polynomials with exact rational coefficients, kept in a
 * canonical form: the polynomial gcd of numerator and denominator is
 * removed, and the denominator is scaled to a primitive integer polynomial
 * whose lowest-order nonzero coefficient is positive. Equal values then
 * have identical representations, so structural equality is value equality.
 */
class RationalFunction {
public:
    /// The zero function 0/1.
    RationalFunction();
    RationalFunction(Polynomial num, Polynomial den);

    static RationalFunction from_polynomial(Polynomial p);
    static RationalFunction constant(const Rat& c);
    static RationalFunction zero() { return RationalFunction(); }
    static RationalFunction one() { return constant(Rat(1)); }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RationalFunction operator+(const RationalFunction& rhs) const;
    RationalFunction operator-(const RationalFunction& rhs) const;
    RationalFunction operator*(const RationalFunction& rhs) const;
    RationalFunction operator/(const RationalFunction& rhs) const;
    RationalFunction operator-() const;
    RationalFunction inverse() const;
    RationalFunction scaled(const Rat& c) const;

    bool operator==(const RationalFunction& rhs) const {
        return num_ == rhs.num_ && den_ == rhs.den_;
    }
    bool operator!=(const RationalFunction& rhs) const {
        return !(*this == rhs);
    }

    /// Derivative by the quotient rule.
    RationalFunction derivative() const;

    /// Substitute z -> z^m (m >= 1).
    RationalFunction substitute_power(std::size_t m) const;

    /// Substitute z -> -z.
    RationalFunction alternate_signs() const;

    /// Value at a rational point; the point must not be a pole.
    Rat eval(const Rat& x) const;

    /// Coefficients 0..order of the Taylor expansion at the origin, by exact
    /// long division; requires den(0) != 0.
    std::vector<Rat> taylor(std::size_t order) const;

    /// Renders as "(num) / (den)", or just "num" when the denominator is 1.
    std::string to_string(const char* var = "z") const;

private:
    void reduce();

    Polynomial num_;
    Polynomial den_;
};

std::ostream& operator<<(std::ostream& os, const RationalFunction& f);

}  // namespace cfzeta
