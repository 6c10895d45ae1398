#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cfzeta/bigint.hpp"
#include "cfzeta/rational_function.hpp"

namespace cfzeta {

/**
 * Truncated power series with exact rational coefficients: the terms of
 * degree 0..order. Arithmetic truncates to the smaller order of the two
 * operands, so a coefficient is never reported beyond where it is known.
 */
class PowerSeries {
public:
    /// The zero series to the given order.
    explicit PowerSeries(std::size_t order);
    /// Coefficients 0..order; missing entries are zero, extras are dropped.
    PowerSeries(std::vector<Rat> coeffs, std::size_t order);

    static PowerSeries expand(const RationalFunction& f, std::size_t order);

    std::size_t order() const { return c_.size() - 1; }
    const Rat& coeff(std::size_t i) const;
    const std::vector<Rat>& coeffs() const { return c_; }

    PowerSeries operator+(const PowerSeries& rhs) const;
    PowerSeries operator-(const PowerSeries& rhs) const;
    PowerSeries operator*(const PowerSeries& rhs) const;
    PowerSeries operator-() const;
    PowerSeries scaled(const Rat& c) const;

    /// Multiplicative inverse; requires a nonzero constant term.
    PowerSeries inverse() const;

    /// exp of the series; requires a zero constant term. Computed by the
    /// recurrence n*e_n = sum_{j=1..n} j*s_j*e_{n-j} from e' = s'e.
    PowerSeries exp() const;

    PowerSeries truncated(std::size_t order) const;

    bool operator==(const PowerSeries& rhs) const { return c_ == rhs.c_; }
    bool operator!=(const PowerSeries& rhs) const { return !(*this == rhs); }

    std::string to_string(const char* var = "z") const;

private:
    std::vector<Rat> c_;
};

std::ostream& operator<<(std::ostream& os, const PowerSeries& s);

}  // namespace cfzeta
