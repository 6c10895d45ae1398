#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <vector>

#include <cfzeta/gen_fun.hpp>
#include <cfzeta/levy.hpp>
#include <cfzeta/torus.hpp>

#include "test_helpers.hpp"

using namespace cfzeta;
using cfzeta::testing::golden_cf;
using cfzeta::testing::half_rt2_cf;
using cfzeta::testing::silver_cf;

namespace {

IntMatrix m2(long a, long b, long c, long d) {
    IntMatrix m(2, 2);
    m.at(0, 0) = a; m.at(0, 1) = b;
    m.at(1, 0) = c; m.at(1, 1) = d;
    return m;
}

// Dominant eigenvalue of a 2x2 integer matrix with distinct real eigenvalues
// and positive trace, as a high-precision real: (t + sqrt(t^2 - 4 det)) / 2.
Real dominant_eigenvalue(const IntMatrix& a, mpfr_prec_t bits) {
    const Int t = a.trace();
    const Int disc = t * t - 4 * a.det();
    return QuadraticSurd::make(t, 2, disc).to_real(bits);
}

}  // namespace

TEST_CASE("entry ratios of period-product powers converge at the spectral gap rate") {
    const CFExpansion mixed({}, {Int(3), Int(1), Int(4)});
    const CFExpansion onetwo({}, {Int(1), Int(2)});
    const CFExpansion golden = golden_cf();
    const CFExpansion silver = silver_cf();
    for (const CFExpansion* cf : {&golden, &silver, &onetwo, &mixed}) {
        const IntMatrix a = n0_n1(*cf, 1).second;
        const Real lambda = dominant_eigenvalue(a, 320);
        const Real log_lambda = lambda.log();
        for (std::size_t n = 10; n <= 30; ++n) {
            const IntMatrix an = a.pow(n);
            const IntMatrix an1 = a.pow(n + 1);
            const Real ratio = Real::from_int(an1.at(0, 0), 320) /
                               Real::from_int(an.at(0, 0), 320);
            // |ratio - lambda| <= lambda^(1 - 2(n-5)): the second eigenvalue
            // has modulus 1/lambda, so the error decays like lambda^(-2n);
            // the five-step slack absorbs the constant.
            const double exponent = 1.0 - 2.0 * (static_cast<double>(n) - 5.0);
            const Real bound = (log_lambda * Real::from_double(exponent, 320)).exp();
            CHECK((ratio - lambda).abs() <= bound);
        }
    }
}

TEST_CASE("radius of convergence composes multiplicatively in the level") {
    const CFExpansion mixed({Int(2), Int(1)}, {Int(3), Int(1), Int(4)});
    const CFExpansion golden = golden_cf();
    const CFExpansion silver = silver_cf();
    const CFExpansion half = half_rt2_cf();
    const double tol = std::ldexp(1.0, -30);
    for (const CFExpansion* cf : {&golden, &silver, &half, &mixed}) {
        const double r1 = radius_of_convergence(*cf, 1).to_double();
        for (std::size_t r = 2; r <= 4; ++r) {
            const double rr = radius_of_convergence(*cf, r).to_double();
            CHECK(std::abs(rr - std::pow(r1, static_cast<double>(r))) <
                  tol * std::pow(r1, static_cast<double>(r)));
        }
    }
}

TEST_CASE("dynamical invariants are conjugation invariant") {
    const IntMatrix cat = m2(2, 1, 1, 1);
    const IntMatrix pell = m2(0, 1, 1, 2);
    const IntMatrix wild = m2(3, 2, 4, 3);  // det 1, trace 6
    std::uint64_t state = 0xC0FFEE;
    for (const IntMatrix* base : {&cat, &pell, &wild}) {
        const ToralAutomorphism f(*base);
        for (int trial = 0; trial < 20; ++trial) {
            // Random unimodular conjugator: a word in the two shears.
            IntMatrix u = IntMatrix::identity(2);
            const std::size_t len = 1 + splitmix64(state) % 6;
            for (std::size_t i = 0; i < len; ++i) {
                switch (splitmix64(state) % 4) {
                    case 0: u = u * m2(1, 1, 0, 1); break;
                    case 1: u = u * m2(1, 0, 1, 1); break;
                    case 2: u = u * m2(1, -1, 0, 1); break;
                    default: u = u * m2(1, 0, -1, 1); break;
                }
            }
            const ToralAutomorphism g(u * *base * u.unimodular_inverse());
            CHECK(g.trace() == f.trace());
            CHECK(g.det() == f.det());
            CHECK(zeta(g) == zeta(f));
            for (unsigned long n = 1; n <= 6; ++n) {
                CHECK(fix_count(g, n) == fix_count(f, n));
            }
            CHECK(entropy(g).to_double() == entropy(f).to_double());
        }
    }
}

TEST_CASE("the smallest zeta pole sits at exp(-entropy)") {
    const CFExpansion mixed({Int(2)}, {Int(3), Int(1), Int(4)});
    const CFExpansion golden = golden_cf();
    const CFExpansion silver = silver_cf();
    const CFExpansion half = half_rt2_cf();
    const double tol = std::ldexp(1.0, -40);
    for (const CFExpansion* cf : {&golden, &silver, &half, &mixed}) {
        const ToralAutomorphism f = from_quadratic(*cf);
        const Real h = entropy(f, 128);
        const Real z0 = (-h).exp();

        // The zeta denominator vanishes at z0.
        const Polynomial den = zeta(f).den();
        Real acc = Real::from_double(0.0, 192);
        for (int i = den.degree(); i >= 0; --i) {
            acc = acc * z0 + Real::from_rat(den.coeff(static_cast<std::size_t>(i)), 192);
        }
        CHECK(std::abs(acc.to_double()) < tol);

        // And z0 equals the level-1 radius raised to the period length.
        const std::size_t ell = cf->period_length();
        const Real rho = radius_of_convergence(*cf, 1, 128);
        const Real rho_ell = (rho.log() * Real::from_int(Int(ell), 128)).exp();
        CHECK(std::abs((rho_ell - z0).to_double()) < tol * z0.to_double());
    }
}

TEST_CASE("every quadratic irrational has levy constant at least log golden ratio") {
    const double floor_val = 0.48121182505960347 - 1e-12;
    std::uint64_t state = 0xFEEDFACE;
    int golden_hits = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const CFExpansion cf = cfzeta::testing::random_cf(state, 4, 4, 9);
        const double v = levy_exact(cf).to_double();
        CHECK(v >= floor_val);
        if (v < floor_val + 1e-9) ++golden_hits;
    }
    // The bound is attained exactly by the all-ones period.
    CHECK(levy_exact(golden_cf()).to_double() ==
          doctest::Approx(0.48121182505960347).epsilon(1e-14));
    (void)golden_hits;
}

TEST_CASE("generating function coefficients are non-negative integers") {
    const CFExpansion mixed({Int(2), Int(1)}, {Int(3), Int(1), Int(4)});
    const CFExpansion golden = golden_cf();
    const CFExpansion half = half_rt2_cf();
    for (const CFExpansion* cf : {&golden, &half, &mixed}) {
        for (std::size_t r = 1; r <= 3; ++r) {
            const GenFunVector g = generating_vector(*cf, r);
            for (std::size_t s = 0; s <= r; ++s) {
                const PowerSeries series = PowerSeries::expand(g.entries[s], 25);
                for (std::size_t i = 0; i <= 25; ++i) {
                    const Rat c = series.coeff(i);
                    CHECK(denominator(c) == 1);
                    CHECK(c >= 0);
                }
            }
        }
    }
}

TEST_CASE("empirical levy estimates converge at rate O(1/n)") {
    const CFExpansion mixed({Int(2)}, {Int(3), Int(1), Int(4)});
    const CFExpansion golden = golden_cf();
    const CFExpansion silver = silver_cf();
    for (const CFExpansion* cf : {&golden, &silver, &mixed}) {
        const double exact = levy_exact(*cf).to_double();
        for (std::size_t n : {100ul, 1000ul, 10000ul}) {
            const double emp = levy_empirical(*cf, n).to_double();
            CHECK(std::abs(exact - emp) < 3.0 / static_cast<double>(n));
        }
    }
}
