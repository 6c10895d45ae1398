#pragma once

// RAII wrapper over MPFR for the few high-precision real computations the
// library needs (surd evaluation, logarithms of exact algebraic numbers,
// entropy, Levy constants). Precision is per-value, in bits; every binary
// operation rounds to the larger precision of its operands, with round to
// nearest throughout.

#include <mpfr.h>

#include <cstdint>
#include <string>

#include "cfzeta/bigint.hpp"

namespace cfzeta {

class Real {
public:
    explicit Real(mpfr_prec_t bits = 128);
    Real(const Real& other);
    Real(Real&& other) noexcept;
    Real& operator=(const Real& other);
    Real& operator=(Real&& other) noexcept;
    ~Real();

    static Real from_int(const Int& v, mpfr_prec_t bits);
    static Real from_rat(const Rat& v, mpfr_prec_t bits);
    static Real from_double(double v, mpfr_prec_t bits);

    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }

    Real operator+(const Real& rhs) const;
    Real operator-(const Real& rhs) const;
    Real operator*(const Real& rhs) const;
    Real operator/(const Real& rhs) const;
    Real operator-() const;

    Real sqrt() const;   // argument must be >= 0
    Real log() const;    // argument must be > 0
    Real exp() const;
    Real abs() const;
    Real nth_root(unsigned long n) const;  // argument must be > 0, n >= 1

    int sign() const { return mpfr_sgn(v_); }
    int compare(const Real& rhs) const { return mpfr_cmp(v_, rhs.v_); }
    bool operator<(const Real& rhs) const { return compare(rhs) < 0; }
    bool operator>(const Real& rhs) const { return compare(rhs) > 0; }
    bool operator<=(const Real& rhs) const { return compare(rhs) <= 0; }
    bool operator>=(const Real& rhs) const { return compare(rhs) >= 0; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    // Copy rounded to a (typically smaller) precision; used to return results
    // at the caller's requested precision after computing with guard bits.
    Real rounded(mpfr_prec_t bits) const;

    // Shortest-ish decimal rendering with the given number of significant
    // digits (default: what the precision supports).
    std::string to_string(int digits = 0) const;

    mpfr_srcptr raw() const { return v_; }
    mpfr_ptr raw() { return v_; }

private:
    mpfr_t v_;
};

}  // namespace cfzeta
