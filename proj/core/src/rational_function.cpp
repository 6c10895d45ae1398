#include "cfzeta/rational_function.hpp"

#include <ostream>
#include <stdexcept>
#include <utility>

namespace cfzeta {

RationalFunction::RationalFunction()
    : num_(), den_(Polynomial::constant(Rat(1))) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) {
        throw std::invalid_argument("rational function denominator is zero");
    }
    reduce();
}

void RationalFunction::reduce() {
    if (num_.is_zero()) {
        den_ = Polynomial::constant(Rat(1));
        return;
    }
    const Polynomial g = Polynomial::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.divrem(g).first;
        den_ = den_.divrem(g).first;
    }
    // Scale so the denominator is primitive integer with positive
    // lowest-order nonzero coefficient; the same factor moves to the
    // numerator, keeping the value fixed.
    const auto [prim, c] = den_.primitive_integer();
    den_ = prim;
    num_ = num_.scaled(Rat(1) / c);
}

RationalFunction RationalFunction::from_polynomial(Polynomial p) {
    return RationalFunction(std::move(p), Polynomial::constant(Rat(1)));
}

RationalFunction RationalFunction::constant(const Rat& c) {
    return from_polynomial(Polynomial::constant(c));
}

RationalFunction RationalFunction::operator+(const RationalFunction& rhs) const {
    return RationalFunction(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& rhs) const {
    return RationalFunction(num_ * rhs.den_ - rhs.num_ * den_, den_ * rhs.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& rhs) const {
    return RationalFunction(num_ * rhs.num_, den_ * rhs.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& rhs) const {
    if (rhs.is_zero()) {
        throw std::domain_error("division by the zero rational function");
    }
    return RationalFunction(num_ * rhs.den_, den_ * rhs.num_);
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction RationalFunction::inverse() const {
    if (is_zero()) {
        throw std::domain_error("the zero rational function has no inverse");
    }
    return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::scaled(const Rat& c) const {
    return RationalFunction(num_.scaled(c), den_);
}

RationalFunction RationalFunction::derivative() const {
    return RationalFunction(
        num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RationalFunction RationalFunction::substitute_power(std::size_t m) const {
    return RationalFunction(num_.substitute_power(m), den_.substitute_power(m));
}

RationalFunction RationalFunction::alternate_signs() const {
    return RationalFunction(num_.alternate_signs(), den_.alternate_signs());
}

Rat RationalFunction::eval(const Rat& x) const {
    const Rat d = den_.eval(x);
    if (d == 0) {
        throw std::domain_error("rational function evaluated at a pole");
    }
    const Rat n = num_.eval(x);
    return n / d;
}

std::vector<Rat> RationalFunction::taylor(std::size_t order) const {
    const Rat d0 = den_.coeff(0);
    if (d0 == 0) {
        throw std::domain_error(
            "series expansion requires a denominator nonzero at the origin");
    }
    std::vector<Rat> c(order + 1, Rat(0));
    for (std::size_t n = 0; n <= order; ++n) {
        Rat acc = num_.coeff(n);
        for (std::size_t j = 1; j <= n; ++j) {
            const Rat dj = den_.coeff(j);
            if (dj == 0) continue;
            acc -= dj * c[n - j];
        }
        c[n] = acc / d0;
    }
    return c;
}

std::string RationalFunction::to_string(const char* var) const {
    if (den_ == Polynomial::constant(Rat(1))) return num_.to_string(var);
    return "(" + num_.to_string(var) + ") / (" + den_.to_string(var) + ")";
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& f) {
    return os << f.to_string();
}

}  // namespace cfzeta
