#include "cfzeta/surd.hpp"

#include <boost/multiprecision/gmp.hpp>

#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace cfzeta {

using boost::multiprecision::gcd;

QuadraticSurd::QuadraticSurd(Int p, Int q, Int d, Int core, Int scale)
    : p_(std::move(p)),
      q_(std::move(q)),
      d_(std::move(d)),
      core_(std::move(core)),
      scale_(std::move(scale)) {}

QuadraticSurd QuadraticSurd::make(const Int& p, const Int& q, const Int& d) {
    if (q == 0) {
        throw std::invalid_argument("surd denominator q must be nonzero");
    }
    if (d <= 0) {
        throw std::invalid_argument("surd radicand d must be positive");
    }
    if (is_perfect_square(d)) {
        throw std::invalid_argument("surd radicand d must not be a perfect square");
    }
    auto [core, s] = square_part(d);
    return canonical(Rat(p, q), Rat(s, q), core);
}

QuadraticSurd QuadraticSurd::from_field(const Rat& u, const Rat& v, const Int& d) {
    if (d <= 0) {
        throw std::invalid_argument("surd radicand d must be positive");
    }
    auto [core, s] = square_part(d);
    Rat vc = v * Rat(s);
    if (core == 1 || vc == 0) {
        throw std::domain_error("value is rational, not a quadratic surd");
    }
    return canonical(u, vc, core);
}

// Minimal-scale canonicalization of the value u + v*sqrt(core) with v != 0
// and core squarefree, > 1. Valid integer triples (P, Q, D) representing the
// value as (P + sqrt(D))/Q with Q | D - P^2 are exactly the lambda-multiples
// (lambda*P0, lambda*Q0, lambda^2*D0) of the base triple built below; taking
// the least admissible lambda makes the triple unique, so structural equality
// of canonical fields coincides with equality of values.
QuadraticSurd QuadraticSurd::canonical(const Rat& u, const Rat& v, const Int& core) {
    const Int un = numerator(u);
    const Int ud = denominator(u);
    const Int vn = numerator(v);
    const Int vd = denominator(v);
    const int sgn = vn < 0 ? -1 : 1;

    const Int g = gcd(ud, vd);
    const Int t0 = ud / g;
    const Int m0 = abs(vn) * t0;
    const Int q0 = sgn * vd * t0;
    const Int p0 = sgn * un * (vd / g);
    const Int d0 = core * m0 * m0;

    const Int excess = d0 - p0 * p0;  // nonzero: core is not a square
    const Int lambda = abs(q0) / gcd(abs(q0), abs(excess));

    return QuadraticSurd(lambda * p0, lambda * q0, lambda * lambda * d0, core,
                         lambda * m0);
}

Int QuadraticSurd::floor() const {
    const Int s = isqrt(d_);
    if (q_ > 0) {
        return floor_div(p_ + s, q_);
    }
    // value = -(p + sqrt(d)) / |q|, and ceil(p + sqrt(d)) = p + s + 1 since
    // sqrt(d) is irrational.
    return floor_div(-p_ - s - 1, -q_);
}

int QuadraticSurd::sign() const {
    int num;  // sign of p + sqrt(d)
    if (p_ >= 0) {
        num = 1;
    } else {
        num = d_ > p_ * p_ ? 1 : -1;
    }
    return q_ > 0 ? num : -num;
}

int QuadraticSurd::sign_of(const Rat& a, const Rat& b, const Int& d0) {
    const int sa = a.sign();
    const int sb = b.sign();
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Opposite signs: |a| against |b|*sqrt(d0), decided on squares. Equality
    // cannot occur, d0 is not a perfect square.
    const Rat lhs = a * a;
    const Rat rhs = b * b * Rat(d0);
    const int cmp = lhs.compare(rhs);
    return sa > 0 ? cmp : -cmp;
}

int QuadraticSurd::compare_rat(const Rat& r) const {
    return sign_of(u() - r, v(), core_);
}

QuadraticSurd QuadraticSurd::galois_conjugate() const {
    return canonical(u(), -v(), core_);
}

std::array<Int, 3> QuadraticSurd::minimal_polynomial() const {
    // From q*x - p = sqrt(d): q^2 x^2 - 2pq x + (p^2 - d) = 0.
    Int a = q_ * q_;
    Int b = -2 * p_ * q_;
    Int c = p_ * p_ - d_;
    const Int g = gcd(gcd(a, b), c);
    return {a / g, b / g, c / g};
}

Real QuadraticSurd::to_real(mpfr_prec_t bits) const {
    if (bits < 53) {
        throw std::invalid_argument("precision must be at least 53 bits");
    }
    const mpfr_prec_t work = bits + 32;
    const Real num = Real::from_int(p_, work) + Real::from_int(d_, work).sqrt();
    return (num / Real::from_int(q_, work)).rounded(bits);
}

QuadraticSurd QuadraticSurd::neg() const {
    return canonical(-u(), -v(), core_);
}

QuadraticSurd QuadraticSurd::add_rat(const Rat& r) const {
    return canonical(u() + r, v(), core_);
}

QuadraticSurd QuadraticSurd::mul_rat(const Rat& r) const {
    if (r == 0) {
        throw std::domain_error("scaling a surd by zero yields a rational");
    }
    return canonical(u() * r, v() * r, core_);
}

QuadraticSurd QuadraticSurd::invert() const {
    // 1/(u + v*sqrt(d0)) = (u - v*sqrt(d0)) / (u^2 - v^2 d0); the norm is
    // nonzero because the value is irrational.
    const Rat uu = u();
    const Rat vv = v();
    const Rat norm = uu * uu - vv * vv * Rat(core_);
    return canonical(uu / norm, -vv / norm, core_);
}

QuadraticSurd QuadraticSurd::mul(const QuadraticSurd& o) const {
    if (core_ != o.core_) {
        throw std::domain_error("surd product requires operands in the same quadratic field");
    }
    const Rat ru = u() * o.u() + v() * o.v() * Rat(core_);
    const Rat rv = u() * o.v() + v() * o.u();
    if (rv == 0) {
        throw std::domain_error("surd product is rational");
    }
    return canonical(ru, rv, core_);
}

QuadraticSurd QuadraticSurd::div(const QuadraticSurd& o) const {
    if (core_ != o.core_) {
        throw std::domain_error("surd quotient requires operands in the same quadratic field");
    }
    return mul(o.invert());
}

QuadraticSurd QuadraticSurd::mobius(const Int& a, const Int& b, const Int& c,
                                    const Int& d) const {
    if (a * d - b * c == 0) {
        throw std::invalid_argument("mobius transform requires a nonsingular matrix");
    }
    const Rat nu = Rat(a) * u() + Rat(b);
    const Rat nv = Rat(a) * v();
    const Rat du = Rat(c) * u() + Rat(d);
    const Rat dv = Rat(c) * v();
    // Rationalize: multiply numerator and denominator by the conjugate of the
    // denominator. The denominator's norm is nonzero (c*x + d = 0 would make
    // x rational).
    const Rat norm = du * du - dv * dv * Rat(core_);
    const Rat ru = (nu * du - nv * dv * Rat(core_)) / norm;
    const Rat rv = (nv * du - nu * dv) / norm;
    return canonical(ru, rv, core_);
}

bool QuadraticSurd::operator<(const QuadraticSurd& o) const {
    if (d_ != o.d_) return d_ < o.d_;
    if (q_ != o.q_) return q_ < o.q_;
    return p_ < o.p_;
}

std::size_t QuadraticSurd::hash() const {
    std::uint64_t state = hash_int(p_);
    std::uint64_t acc = splitmix64(state);
    state ^= hash_int(q_);
    acc ^= splitmix64(state);
    state ^= hash_int(d_);
    acc ^= splitmix64(state);
    return static_cast<std::size_t>(acc);
}

std::string QuadraticSurd::to_string() const {
    std::ostringstream os;
    if (p_ == 0) {
        os << "sqrt(" << d_ << ")/" << q_;
    } else {
        os << "(" << p_ << "+sqrt(" << d_ << "))/" << q_;
    }
    return os.str();
}

GaussStep gauss_step(const QuadraticSurd& x) {
    if (x.sign() <= 0 || x.compare_rat(1) >= 0) {
        throw std::domain_error("gauss map requires 0 < x < 1");
    }
    const QuadraticSurd y = x.invert();
    Int a = y.floor();
    QuadraticSurd next = y.add_rat(-Rat(a));
    return {std::move(a), std::move(next)};
}

std::ostream& operator<<(std::ostream& os, const QuadraticSurd& x) {
    return os << x.to_string();
}

}  // namespace cfzeta
