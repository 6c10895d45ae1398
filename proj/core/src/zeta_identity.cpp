#include "cfzeta/zeta_identity.hpp"

#include <stdexcept>

#include "cfzeta/gen_fun.hpp"
#include "cfzeta/power_series.hpp"
#include "cfzeta/torus.hpp"

namespace cfzeta {

namespace {

RationalFunction z_monomial(std::size_t deg) {
    return RationalFunction::from_polynomial(Polynomial::monomial(Rat(1), deg));
}

RFMatrix lift_scaled(const IntMatrix& m, std::size_t z_power) {
    return RFMatrix::lift(m).scaled(z_monomial(z_power));
}

}  // namespace

UVXY uvxy(const CFExpansion& cf, std::size_t order) {
    const std::size_t k = cf.preperiod_length();
    const std::size_t l = cf.period_length();
    if (order < 2 * (k + l) + 4) {
        throw std::invalid_argument(
            "certification order must be at least 2(k+l)+4");
    }

    // u = z^k E(a_1)...E(a_k), y = sum_{n<k} z^n E(a_1)...E(a_{n+1}).
    RFMatrix u = RFMatrix::identity(2);
    RFMatrix y(2);
    {
        IntMatrix prefix = IntMatrix::identity(2);
        for (std::size_t n = 0; n < k; ++n) {
            prefix = prefix * e_matrix(cf.quotient(n + 1), 1);
            y = y + lift_scaled(prefix, n);
        }
        u = lift_scaled(prefix, k);
    }

    // v = sum_{m<l} z^m E(a_{k+1})...E(a_{k+m+1}).
    RFMatrix v(2);
    {
        IntMatrix tail = IntMatrix::identity(2);
        for (std::size_t m = 0; m < l; ++m) {
            tail = tail * e_matrix(cf.quotient(k + m + 1), 1);
            v = v + lift_scaled(tail, m);
        }
    }

    // x from the level-1 closed forms; p_0 = 0 and q_0 = 1.
    const GenFunVector gen = generating_vector(cf, 1);
    const RationalFunction& fp = gen.entries[0];
    const RationalFunction& fq = gen.entries[1];
    const RationalFunction z = z_monomial(1);
    RFMatrix x(2);
    x.at(0, 0) = fp;
    x.at(0, 1) = fp / z;
    x.at(1, 0) = fq;
    x.at(1, 1) = (fq - RationalFunction::one()) / z;

    // Certify x against the raw convergent series: entry (row, col) of the
    // full series matrix sum z^n [[p_n, p_{n+1}], [q_n, q_{n+1}]].
    const auto conv = convergents(cf, order + 2);
    for (std::size_t row = 0; row < 2; ++row) {
        for (std::size_t col = 0; col < 2; ++col) {
            const PowerSeries series =
                PowerSeries::expand(x.at(row, col), order);
            for (std::size_t n = 0; n <= order; ++n) {
                const Int& expected = (row == 0) ? conv[n + col].first
                                                 : conv[n + col].second;
                if (series.coeff(n) != Rat(expected)) {
                    throw std::logic_error(
                        "closed-form generating functions disagree with the "
                        "convergent series; the periodic matrix identity "
                        "must have been assembled wrongly");
                }
            }
        }
    }

    return UVXY{u, v, x, y};
}

RFMatrix w_direct(const CFExpansion& cf) {
    const std::size_t l = cf.period_length();
    const IntMatrix n1 = n0_n1(cf, 1).second;
    const RFMatrix system = RFMatrix::identity(2) - lift_scaled(n1, l);
    return system.inverse();
}

RFMatrix w_from_uvxy(const CFExpansion& cf) {
    const std::size_t k = cf.preperiod_length();
    const std::size_t l = cf.period_length();
    const UVXY parts = uvxy(cf, 2 * (k + l) + 4);
    const RationalFunction dv = parts.v.det();
    if (dv.is_zero()) {
        throw std::domain_error(
            "v is singular; det v = " + det_v(cf).to_string());
    }
    return parts.u.inverse() * (parts.x - parts.y) * parts.v.inverse();
}

Polynomial det_v(const CFExpansion& cf) {
    const std::size_t k = cf.preperiod_length();
    const std::size_t l = cf.period_length();
    // v's entries are integer polynomials; take the 2x2 determinant
    // directly at that level.
    Polynomial v00, v01, v10, v11;
    IntMatrix tail = IntMatrix::identity(2);
    for (std::size_t m = 0; m < l; ++m) {
        tail = tail * e_matrix(cf.quotient(k + m + 1), 1);
        v00 = v00 + Polynomial::monomial(Rat(tail.at(0, 0)), m);
        v01 = v01 + Polynomial::monomial(Rat(tail.at(0, 1)), m);
        v10 = v10 + Polynomial::monomial(Rat(tail.at(1, 0)), m);
        v11 = v11 + Polynomial::monomial(Rat(tail.at(1, 1)), m);
    }
    return v00 * v11 - v01 * v10;
}

IdentityReport main_identity_check(const CFExpansion& cf, std::size_t order) {
    if (order < 10) {
        throw std::invalid_argument("series order must be >= 10");
    }
    const std::size_t l = cf.period_length();

    // Zeta side: 2 + z^l (log zeta)'(z^l) + z^l/(1-z^l) + (-z)^l/(1-(-z)^l).
    const ToralAutomorphism f = from_quadratic(cf);
    const RationalFunction zf = zeta(f);
    const RationalFunction log_deriv = zf.derivative() / zf;
    const RationalFunction zl = z_monomial(l);

    const Polynomial one = Polynomial::constant(Rat(1));
    const Rat parity = (l % 2 == 0) ? Rat(1) : Rat(-1);
    const Polynomial zl_poly = Polynomial::monomial(Rat(1), l);
    const Polynomial neg_zl_poly = Polynomial::monomial(parity, l);

    RationalFunction lhs = RationalFunction::constant(Rat(2));
    lhs = lhs + zl * log_deriv.substitute_power(l);
    lhs = lhs + RationalFunction(zl_poly, one - zl_poly);
    lhs = lhs + RationalFunction(neg_zl_poly, one - neg_zl_poly);

    // Matrix side.
    const RationalFunction rhs = w_from_uvxy(cf).trace();

    IdentityReport report{lhs, rhs, lhs == rhs, order, std::nullopt};
    const PowerSeries left = PowerSeries::expand(lhs, order);
    const PowerSeries right = PowerSeries::expand(rhs, order);
    for (std::size_t n = 0; n <= order; ++n) {
        if (left.coeff(n) != right.coeff(n)) {
            report.witness = n;
            break;
        }
    }
    return report;
}

}  // namespace cfzeta
