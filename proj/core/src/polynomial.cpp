#include "cfzeta/polynomial.hpp"

#include <ostream>
#include <stdexcept>

namespace cfzeta {

namespace {

using boost::multiprecision::abs;
using boost::multiprecision::gcd;
using boost::multiprecision::lcm;

// Integer polynomial, ascending coefficients, trailing zeros removed.
using ZPoly = std::vector<Int>;

void ztrim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Int zcontent(const ZPoly& p) {
    Int g = 0;
    for (const Int& c : p) {
        const Int a = abs(c);
        g = gcd(g, a);
        if (g == 1) break;
    }
    return g;
}

ZPoly zscaled_down(const ZPoly& p, const Int& g) {
    ZPoly r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[i] / g;
    return r;
}

// Pseudo-remainder of a by b over the integers:
// lc(b)^(deg a - deg b + 1) * a reduced modulo b. Requires deg a >= deg b
// and b nonzero.
ZPoly zprem(ZPoly a, const ZPoly& b) {
    const Int lead = b.back();
    int owed = static_cast<int>(a.size()) - static_cast<int>(b.size()) + 1;
    while (a.size() >= b.size()) {
        const std::size_t shift = a.size() - b.size();
        const Int top = a.back();
        // a := lead * a - top * z^shift * b, which cancels the top term.
        ZPoly next(a.size() - 1, Int(0));
        for (std::size_t i = 0; i + 1 < a.size(); ++i) next[i] = a[i] * lead;
        for (std::size_t j = 0; j + 1 < b.size(); ++j) next[shift + j] -= top * b[j];
        a = std::move(next);
        ztrim(a);
        --owed;
    }
    // The degree can drop by more than one per step; pay the remaining
    // lead factors so the result is exactly lead^(delta+1) * (a mod b).
    for (; owed > 0; --owed) {
        for (Int& c : a) c *= lead;
    }
    return a;
}

}  // namespace

Polynomial::Polynomial(std::vector<Rat> coeffs) : c_(std::move(coeffs)) {
    trim();
}

void Polynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Polynomial Polynomial::monomial(const Rat& c, std::size_t deg) {
    if (c == 0) return Polynomial();
    std::vector<Rat> v(deg + 1, Rat(0));
    v[deg] = c;
    return Polynomial(std::move(v));
}

Polynomial Polynomial::constant(const Rat& c) { return monomial(c, 0); }

const Rat& Polynomial::coeff(std::size_t i) const {
    static const Rat zero(0);
    return i < c_.size() ? c_[i] : zero;
}

const Rat& Polynomial::leading() const {
    if (c_.empty()) {
        throw std::domain_error("zero polynomial has no leading coefficient");
    }
    return c_.back();
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
    std::vector<Rat> v(std::max(c_.size(), rhs.c_.size()), Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) v[i] += rhs.c_[i];
    return Polynomial(std::move(v));
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
    std::vector<Rat> v(std::max(c_.size(), rhs.c_.size()), Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) v[i] -= rhs.c_[i];
    return Polynomial(std::move(v));
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
    if (is_zero() || rhs.is_zero()) return Polynomial();
    std::vector<Rat> v(c_.size() + rhs.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.c_.size(); ++j) {
            v[i + j] += c_[i] * rhs.c_[j];
        }
    }
    return Polynomial(std::move(v));
}

Polynomial Polynomial::operator-() const {
    std::vector<Rat> v(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] = -c_[i];
    return Polynomial(std::move(v));
}

Polynomial Polynomial::scaled(const Rat& c) const {
    if (c == 0) return Polynomial();
    std::vector<Rat> v(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] = c_[i] * c;
    return Polynomial(std::move(v));
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial result = constant(Rat(1));
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1u) result = result * base;
        base = base * base;
        e >>= 1u;
    }
    return result;
}

std::pair<Polynomial, Polynomial> Polynomial::divrem(
    const Polynomial& divisor) const {
    if (divisor.is_zero()) {
        throw std::domain_error("polynomial division by zero");
    }
    std::vector<Rat> rem = c_;
    const int dd = divisor.degree();
    const Rat& lead = divisor.leading();
    std::vector<Rat> quo;
    if (degree() >= dd) quo.assign(static_cast<std::size_t>(degree() - dd) + 1, Rat(0));
    int dr = static_cast<int>(rem.size()) - 1;
    while (dr >= dd) {
        const Rat q = rem[static_cast<std::size_t>(dr)] / lead;
        if (q != 0) {
            quo[static_cast<std::size_t>(dr - dd)] = q;
            for (int i = 0; i <= dd; ++i) {
                rem[static_cast<std::size_t>(dr - dd + i)] -=
                    q * divisor.c_[static_cast<std::size_t>(i)];
            }
        }
        --dr;
    }
    return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

Polynomial Polynomial::derivative() const {
    if (c_.size() <= 1) return Polynomial();
    std::vector<Rat> v(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Rat(i);
    return Polynomial(std::move(v));
}

Rat Polynomial::eval(const Rat& x) const {
    Rat acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) {
        const Rat t = acc * x + c_[i];
        acc = t;
    }
    return acc;
}

Polynomial Polynomial::substitute_power(std::size_t m) const {
    if (m == 0) {
        throw std::invalid_argument("power substitution exponent must be >= 1");
    }
    if (is_zero()) return Polynomial();
    std::vector<Rat> v((c_.size() - 1) * m + 1, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) v[i * m] = c_[i];
    return Polynomial(std::move(v));
}

Polynomial Polynomial::alternate_signs() const {
    std::vector<Rat> v(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        v[i] = (i % 2 == 0) ? c_[i] : -c_[i];
    }
    return Polynomial(std::move(v));
}

std::pair<Polynomial, Rat> Polynomial::primitive_integer() const {
    if (is_zero()) return {Polynomial(), Rat(1)};
    Int den_lcm = 1;
    for (const Rat& c : c_) {
        const Int d = denominator(c);
        den_lcm = lcm(den_lcm, d);
    }
    ZPoly z(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        const Rat scaled = c_[i] * Rat(den_lcm);
        z[i] = numerator(scaled);
    }
    Int g = zcontent(z);
    std::size_t low = 0;
    while (z[low] == 0) ++low;
    if (z[low] < 0) g = -g;
    std::vector<Rat> v(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) v[i] = Rat(z[i] / g);
    return {Polynomial(std::move(v)), Rat(g, den_lcm)};
}

Polynomial Polynomial::gcd(const Polynomial& a, const Polynomial& b) {
    const auto normalize = [](const Polynomial& p) {
        Polynomial q = p.primitive_integer().first;
        if (!q.is_zero() && q.leading() < 0) q = -q;
        return q;
    };
    if (a.is_zero()) return normalize(b);
    if (b.is_zero()) return normalize(a);

    const auto clear_to_integers = [](const Polynomial& p) {
        const Polynomial prim = p.primitive_integer().first;
        ZPoly z(prim.c_.size());
        for (std::size_t i = 0; i < prim.c_.size(); ++i) {
            z[i] = numerator(prim.c_[i]);
        }
        return z;
    };
    ZPoly u = clear_to_integers(a);
    ZPoly v = clear_to_integers(b);
    if (u.size() < v.size()) std::swap(u, v);

    // Subresultant remainder sequence: divide each pseudo-remainder by
    // g * h^d, which stays an exact integer division and keeps coefficient
    // growth linear instead of exponential.
    Int g = 1;
    Int h = 1;
    while (true) {
        const int d = static_cast<int>(u.size()) - static_cast<int>(v.size());
        ZPoly r = zprem(u, v);
        if (r.empty()) break;
        if (r.size() == 1) {
            v.assign(1, Int(1));
            break;
        }
        u = v;
        Int divisor = g;
        for (int i = 0; i < d; ++i) divisor *= h;
        v = zscaled_down(r, divisor);
        g = abs(u.back());
        if (d > 0) {
            Int hn = 1;
            for (int i = 0; i < d; ++i) hn *= g;
            for (int i = 0; i + 1 < d; ++i) hn /= h;
            h = hn;
        }
    }

    const Int content = zcontent(v);
    Int sign_fix = content;
    if (v.back() < 0) sign_fix = -sign_fix;
    std::vector<Rat> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rat(v[i] / sign_fix);
    return Polynomial(std::move(out));
}

std::string Polynomial::to_string(const char* var) const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        const bool negative = c_[i] < 0;
        const Rat a = negative ? Rat(-c_[i]) : c_[i];
        std::string body;
        if (i == 0) {
            body = cfzeta::to_string(a);
        } else {
            if (a != 1) {
                const std::string cs = cfzeta::to_string(a);
                body = (denominator(a) == 1) ? cs : "(" + cs + ")";
            }
            body += var;
            if (i > 1) body += "^" + std::to_string(i);
        }
        if (first) {
            out = (negative ? "-" : "") + body;
            first = false;
        } else {
            out += (negative ? " - " : " + ") + body;
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    return os << p.to_string();
}

}  // namespace cfzeta
