#include "cfzeta/gen_fun.hpp"

#include <map>
#include <shared_mutex>
#include <stdexcept>

namespace cfzeta {

namespace {

constexpr std::size_t kMaxLevel = 4;

void check_level(std::size_t r) {
    if (r < 1) {
        throw std::invalid_argument("level r must be >= 1");
    }
    if (r > kMaxLevel) {
        throw std::invalid_argument(
            "level r above 4 is not supported: the symbolic matrix "
            "inversion cost grows too quickly with the level");
    }
}

Int int_pow(const Int& base, std::size_t e) {
    Int r = 1;
    for (std::size_t i = 0; i < e; ++i) r *= base;
    return r;
}

// Entry s of the monomial vector of a convergent pair: p^(r-s) * q^s.
std::vector<Int> monomial_vector(const Int& p, const Int& q, std::size_t r) {
    std::vector<Int> v(r + 1);
    for (std::size_t s = 0; s <= r; ++s) {
        v[s] = int_pow(p, r - s) * int_pow(q, s);
    }
    return v;
}

std::vector<Rat> rat_apply(const IntMatrix& m, const std::vector<Rat>& v) {
    std::vector<Rat> w(m.rows(), Rat(0));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m.at(i, j) == 0) continue;
            w[i] += Rat(m.at(i, j)) * v[j];
        }
    }
    return w;
}

// Memo for the closed forms: reads share, each key is written once.
std::shared_mutex memo_mutex;
std::map<std::string, GenFunVector> memo_table;

}  // namespace

std::pair<std::vector<Polynomial>, std::vector<Polynomial>> p0_p1(
    const CFExpansion& cf, std::size_t r) {
    if (r < 1) {
        throw std::invalid_argument("level r must be >= 1");
    }
    const std::size_t k = cf.preperiod_length();
    const std::size_t l = cf.period_length();
    const auto conv = convergents(cf, k + l);
    std::vector<std::vector<Rat>> c0(r + 1, std::vector<Rat>(k > 0 ? k : 1, Rat(0)));
    std::vector<std::vector<Rat>> c1(r + 1, std::vector<Rat>(k + l, Rat(0)));
    for (std::size_t n = 0; n < k + l; ++n) {
        const std::vector<Int> mono =
            monomial_vector(conv[n].first, conv[n].second, r);
        for (std::size_t s = 0; s <= r; ++s) {
            if (n < k) {
                c0[s][n] = Rat(mono[s]);
            } else {
                c1[s][n] = Rat(mono[s]);
            }
        }
    }
    std::vector<Polynomial> p0(r + 1);
    std::vector<Polynomial> p1(r + 1);
    for (std::size_t s = 0; s <= r; ++s) {
        p0[s] = Polynomial(std::move(c0[s]));
        p1[s] = Polynomial(std::move(c1[s]));
    }
    return {std::move(p0), std::move(p1)};
}

GenFunVector generating_vector(const CFExpansion& cf, std::size_t r) {
    check_level(r);
    const std::string key = cf.to_string() + "|" + std::to_string(r);
    {
        std::shared_lock lock(memo_mutex);
        const auto it = memo_table.find(key);
        if (it != memo_table.end()) return it->second;
    }

    const std::size_t l = cf.period_length();
    const auto [n0, n1] = n0_n1(cf, r);
    const IntMatrix conjugated = n0 * n1 * n0.unimodular_inverse();

    // id - z^l * (N0 N1 N0^{-1}), inverted symbolically.
    const RationalFunction zl(Polynomial::monomial(Rat(1), l),
                              Polynomial::constant(Rat(1)));
    const RFMatrix system =
        RFMatrix::identity(r + 1) - RFMatrix::lift(conjugated).scaled(zl);
    const RFMatrix resolvent = system.inverse();

    const auto [p0, p1] = p0_p1(cf, r);
    std::vector<RationalFunction> p1rf(r + 1);
    for (std::size_t s = 0; s <= r; ++s) {
        p1rf[s] = RationalFunction::from_polynomial(p1[s]);
    }
    const std::vector<RationalFunction> tailpart = resolvent.apply(p1rf);

    GenFunVector result;
    result.r = r;
    result.entries.resize(r + 1);
    for (std::size_t s = 0; s <= r; ++s) {
        result.entries[s] =
            RationalFunction::from_polynomial(p0[s]) + tailpart[s];
    }

    {
        std::unique_lock lock(memo_mutex);
        memo_table.emplace(key, result);
    }
    return result;
}

PowerSeries direct_series(const CFExpansion& cf, std::size_t r, std::size_t s,
                          std::size_t order) {
    if (r < 1) {
        throw std::invalid_argument("level r must be >= 1");
    }
    if (s > r) {
        throw std::invalid_argument(
            "monomial exponent s must satisfy 0 <= s <= r");
    }
    const auto conv = convergents(cf, order + 1);
    std::vector<Rat> c(order + 1);
    for (std::size_t n = 0; n <= order; ++n) {
        c[n] = Rat(int_pow(conv[n].first, r - s) * int_pow(conv[n].second, s));
    }
    return PowerSeries(std::move(c), order);
}

Real radius_of_convergence(const CFExpansion& cf, std::size_t r,
                           mpfr_prec_t bits) {
    check_level(r);
    const std::size_t l = cf.period_length();
    const auto [n0, n1] = n0_n1(cf, r);
    const mpfr_prec_t work = bits + 32;
    const Real one = Real::from_int(1, work);

    if (r == 1) {
        // Dominant root of x^2 - tr x + det, with det = +-1: exact surd.
        const Int tr = n1.trace();
        const Int det = n1.det();
        const Int disc = tr * tr - 4 * det;
        const QuadraticSurd lambda = QuadraticSurd::make(tr, 2, disc);
        return (one / lambda.to_real(work).nth_root(l)).rounded(bits);
    }

    // Power iteration with exact rational Collatz bounds: for a
    // non-negative primitive matrix and positive vector v, the dominant
    // eigenvalue lies between min and max of (Nv)_i / v_i.
    const std::size_t dim = n1.rows();
    std::vector<Rat> v(dim, Rat(1));
    const Rat tol(Int(1), Int(1) << 48);
    Rat low(0);
    Rat high(0);
    for (std::size_t iter = 0;; ++iter) {
        if (iter > 100000) {
            throw std::logic_error(
                "power iteration failed to converge; the periodic matrix "
                "should be primitive");
        }
        const std::vector<Rat> w = rat_apply(n1, v);
        low = w[0] / v[0];
        high = low;
        for (std::size_t i = 1; i < dim; ++i) {
            const Rat q = w[i] / v[i];
            if (q < low) low = q;
            if (q > high) high = q;
        }
        const Rat width = high - low;
        const Rat bound = high * tol;
        if (width < bound) break;
        Rat mx = w[0];
        for (std::size_t i = 1; i < dim; ++i) {
            if (w[i] > mx) mx = w[i];
        }
        v = w;
        for (Rat& x : v) x /= mx;
    }
    const Rat lambda = (low + high) / 2;
    return (one / Real::from_rat(lambda, work).nth_root(l)).rounded(bits);
}

ShiftIdentityReport shift_identity_check(const QuadraticSurd& x, std::size_t m,
                                         std::size_t r, std::size_t order) {
    check_level(r);
    if (x.sign() <= 0 || x.compare_rat(Rat(1)) >= 0) {
        throw std::invalid_argument("shift identity requires 0 < x < 1");
    }
    if (m > order) {
        throw std::invalid_argument(
            "shift count must not exceed the series order");
    }

    ShiftIdentityReport report;
    report.passed = true;
    report.steps = m;
    report.level = r;
    report.order = order;

    const CFExpansion cf = CFExpansion::expand(x);
    const auto conv = convergents(cf, order + 1);

    CFExpansion shifted_cf = cf;
    for (std::size_t i = 0; i < m; ++i) shifted_cf = shifted_cf.shifted();
    const auto conv_hat = convergents(shifted_cf, order + 1 - m);

    IntMatrix e = IntMatrix::identity(r + 1);
    for (std::size_t i = 1; i <= m; ++i) {
        e = e * e_matrix(cf.quotient(i), r);
    }

    for (std::size_t n = 0; n <= order && report.passed; ++n) {
        const std::vector<Int> lhs =
            monomial_vector(conv[n].first, conv[n].second, r);
        std::vector<Int> rhs(r + 1, Int(0));
        if (n < m) {
            rhs = lhs;  // the explicit monomial terms agree by construction,
                        // so only n >= m carries information
        } else {
            const std::vector<Int> tail = monomial_vector(
                conv_hat[n - m].first, conv_hat[n - m].second, r);
            for (std::size_t s = 0; s <= r; ++s) {
                for (std::size_t j = 0; j <= r; ++j) {
                    rhs[s] += e.at(s, j) * tail[j];
                }
            }
        }
        for (std::size_t s = 0; s <= r; ++s) {
            if (lhs[s] != rhs[s]) {
                report.passed = false;
                report.detail = "mismatch at entry s=" + std::to_string(s) +
                                ", coefficient of z^" + std::to_string(n);
                break;
            }
        }
    }
    if (report.passed) {
        report.detail = "all coefficients through order " +
                        std::to_string(order) + " agree";
    }
    return report;
}

}  // namespace cfzeta
