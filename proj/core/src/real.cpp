#include "cfzeta/real.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace cfzeta {

namespace {
mpfr_prec_t max_prec(const Real& a, const Real& b) {
    return std::max(a.precision(), b.precision());
}
}  // namespace

Real::Real(mpfr_prec_t bits) {
    if (bits < MPFR_PREC_MIN) {
        bits = MPFR_PREC_MIN;
    }
    mpfr_init2(v_, bits);
    mpfr_set_zero(v_, 1);
}

Real::Real(const Real& other) {
    mpfr_init2(v_, other.precision());
    mpfr_set(v_, other.v_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
    mpfr_init2(v_, other.precision());
    mpfr_swap(v_, other.v_);
}

Real& Real::operator=(const Real& other) {
    if (this != &other) {
        mpfr_set_prec(v_, other.precision());
        mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
}

Real& Real::operator=(Real&& other) noexcept {
    if (this != &other) {
        mpfr_swap(v_, other.v_);
    }
    return *this;
}

Real::~Real() {
    mpfr_clear(v_);
}

Real Real::from_int(const Int& v, mpfr_prec_t bits) {
    Real r(bits);
    mpfr_set_z(r.v_, v.backend().data(), MPFR_RNDN);
    return r;
}

Real Real::from_rat(const Rat& v, mpfr_prec_t bits) {
    Real r(bits);
    mpfr_set_q(r.v_, v.backend().data(), MPFR_RNDN);
    return r;
}

Real Real::from_double(double v, mpfr_prec_t bits) {
    Real r(bits);
    mpfr_set_d(r.v_, v, MPFR_RNDN);
    return r;
}

Real Real::operator+(const Real& rhs) const {
    Real r(max_prec(*this, rhs));
    mpfr_add(r.v_, v_, rhs.v_, MPFR_RNDN);
    return r;
}

Real Real::operator-(const Real& rhs) const {
    Real r(max_prec(*this, rhs));
    mpfr_sub(r.v_, v_, rhs.v_, MPFR_RNDN);
    return r;
}

Real Real::operator*(const Real& rhs) const {
    Real r(max_prec(*this, rhs));
    mpfr_mul(r.v_, v_, rhs.v_, MPFR_RNDN);
    return r;
}

Real Real::operator/(const Real& rhs) const {
    if (mpfr_zero_p(rhs.v_)) {
        throw std::domain_error("Real: division by zero");
    }
    Real r(max_prec(*this, rhs));
    mpfr_div(r.v_, v_, rhs.v_, MPFR_RNDN);
    return r;
}

Real Real::operator-() const {
    Real r(precision());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

Real Real::sqrt() const {
    if (sign() < 0) {
        throw std::domain_error("Real: sqrt of negative value");
    }
    Real r(precision());
    mpfr_sqrt(r.v_, v_, MPFR_RNDN);
    return r;
}

Real Real::log() const {
    if (sign() <= 0) {
        throw std::domain_error("Real: log of non-positive value");
    }
    Real r(precision());
    mpfr_log(r.v_, v_, MPFR_RNDN);
    return r;
}

Real Real::exp() const {
    Real r(precision());
    mpfr_exp(r.v_, v_, MPFR_RNDN);
    return r;
}

Real Real::nth_root(unsigned long n) const {
    if (n == 0) {
        throw std::invalid_argument("Real: root index must be >= 1");
    }
    if (sign() <= 0) {
        throw std::domain_error("Real: root of non-positive value");
    }
    Real r(precision());
    mpfr_rootn_ui(r.v_, v_, n, MPFR_RNDN);
    return r;
}

Real Real::abs() const {
    Real r(precision());
    mpfr_abs(r.v_, v_, MPFR_RNDN);
    return r;
}

Real Real::rounded(mpfr_prec_t bits) const {
    Real r(bits);
    mpfr_set(r.raw(), v_, MPFR_RNDN);
    return r;
}

std::string Real::to_string(int digits) const {
    if (digits <= 0) {
        // bits * log10(2), rounded down, is the supported decimal length.
        digits = static_cast<int>(static_cast<double>(precision()) * 0.30103);
        digits = std::max(digits, 6);
    }
    std::vector<char> buf(static_cast<size_t>(digits) + 32);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, v_);
    return std::string(buf.data());
}

}  // namespace cfzeta
