#include "cfzeta/levy.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace cfzeta {

namespace {

using boost::multiprecision::abs;

// Dominant root of x^2 - tr x + det for the level-1 periodic matrix, which
// always has positive trace and determinant +-1.
QuadraticSurd dominant_root(const Int& tr, const Int& det) {
    const Int disc = tr * tr - 4 * det;
    return QuadraticSurd::make(tr, 2, disc);
}

}  // namespace

Real levy_exact(const CFExpansion& cf, mpfr_prec_t bits) {
    const mpfr_prec_t work = bits + 32;
    const IntMatrix n1 = n0_n1(cf, 1).second;
    const QuadraticSurd lambda = dominant_root(n1.trace(), n1.det());
    const Real log_lambda = lambda.to_real(work).log();
    const Real ell = Real::from_int(Int(cf.period_length()), work);
    return (log_lambda / ell).rounded(bits);
}

Real levy_empirical(const CFExpansion& cf, std::size_t n, mpfr_prec_t bits) {
    if (n < 2) {
        throw std::invalid_argument("empirical depth must be >= 2");
    }
    const mpfr_prec_t work = bits + 32;
    Int q_prev = 1;  // q_0
    Int q_curr = cf.quotient(1);
    for (std::size_t i = 2; i <= n; ++i) {
        const Int q_next = cf.quotient(i) * q_curr + q_prev;
        q_prev = q_curr;
        q_curr = q_next;
    }
    const Real log_q = Real::from_int(q_curr, work).log();
    return (log_q / Real::from_int(Int(n), work)).rounded(bits);
}

Real levy_birkhoff(const CFExpansion& cf, mpfr_prec_t bits) {
    const mpfr_prec_t work = bits + 32;
    const std::size_t ell = cf.period_length();
    // The purely periodic tail is the Gauss-orbit base point.
    QuadraticSurd point = CFExpansion({}, cf.period()).value();
    Real sum = Real::from_int(0, work);
    for (std::size_t s = 0; s < ell; ++s) {
        sum = sum + point.to_real(work).log();
        if (s + 1 < ell) point = gauss_step(point).next;
    }
    const Real ell_real = Real::from_int(Int(ell), work);
    return (-(sum / ell_real)).rounded(bits);
}

std::vector<QuadraticSurd> renorm_intervals(const QuadraticSurd& x,
                                            std::size_t n) {
    if (x.sign() <= 0 || x.compare_rat(Rat(1)) >= 0) {
        throw std::invalid_argument(
            "renormalisation intervals require 0 < x < 1");
    }
    const CFExpansion cf = CFExpansion::expand(x);
    const auto conv = convergents(cf, n + 1);
    std::vector<QuadraticSurd> deltas;
    deltas.reserve(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        QuadraticSurd d =
            x.mul_rat(Rat(conv[i].second)).add_rat(-Rat(conv[i].first));
        if (d.sign() < 0) d = d.neg();
        deltas.push_back(d);
    }
    // Certify Delta_j / Delta_0 = T(x) T^2(x) ... T^j(x) exactly. Every
    // partial product is irrational (it equals a ratio of interval
    // lengths), so the surd product never degenerates.
    QuadraticSurd orbit = gauss_step(x).next;
    QuadraticSurd product = orbit;
    for (std::size_t j = 1; j <= n; ++j) {
        if (j > 1) {
            orbit = gauss_step(orbit).next;
            product = product.mul(orbit);
        }
        if (deltas[j].div(deltas[0]) != product) {
            throw std::logic_error(
                "renormalisation product identity failed; this contradicts "
                "the exact interval recursion");
        }
    }
    return deltas;
}

MonteCarloResult levy_ae_montecarlo(std::size_t samples, std::size_t depth,
                                    std::uint64_t seed) {
    if (samples < 1) {
        throw std::invalid_argument("sample count must be >= 1");
    }
    if (depth < 100) {
        throw std::invalid_argument("depth must be >= 100");
    }
    // Each partial quotient consumes about log10(e^1.19) decimal digits of
    // the denominator, so 1.8*depth digits leave a comfortable margin; the
    // guard documents the bound that would make `depth` unreachable.
    const std::size_t digits =
        static_cast<std::size_t>(std::ceil(1.8 * static_cast<double>(depth)));
    const double needed =
        1.5 * static_cast<double>(depth) * (1.19 / std::log(10.0));
    if (static_cast<double>(digits) < needed) {
        throw std::domain_error(
            "depth too large for the sampled denominator size");
    }

    Int q_bound = 1;
    for (std::size_t i = 0; i < digits; ++i) q_bound *= 10;
    const std::size_t nbits = msb(q_bound) + 1;
    const std::size_t nwords = (nbits + 63) / 64;

    std::uint64_t split_state = seed;
    double sum = 0.0;
    double sum_sq = 0.0;
    for (std::size_t s = 0; s < samples; ++s) {
        std::mt19937_64 rng(splitmix64(split_state));
        // Draw P uniform in (0, Q), rejecting overshoots, and keep drawing
        // until the continued fraction is deep enough (rational inputs
        // terminate, but at ~1.8 digits per quotient virtually never
        // before `depth`).
        Int q_depth = 0;
        while (true) {
            Int p = 0;
            for (std::size_t w = 0; w < nwords; ++w) {
                p <<= 64;
                p += Int(rng());
            }
            p >>= (nwords * 64 - nbits);
            if (p <= 0 || p >= q_bound) continue;

            // Euclidean continued fraction of p / q_bound, tracking the
            // convergent denominator recurrence only.
            Int u = q_bound;
            Int v = p;
            Int den_prev = 0;  // q_{-1} in the recurrence seed
            Int den_curr = 1;  // q_0
            std::size_t terms = 0;
            while (v != 0 && terms < depth) {
                const Int a = u / v;
                const Int r = u - a * v;
                u = v;
                v = r;
                const Int den_next = a * den_curr + den_prev;
                den_prev = den_curr;
                den_curr = den_next;
                ++terms;
            }
            if (terms == depth) {
                q_depth = den_curr;
                break;
            }
        }
        const double value =
            Real::from_int(q_depth, 96).log().to_double() /
            static_cast<double>(depth);
        sum += value;
        sum_sq += value * value;
    }

    MonteCarloResult result;
    result.mean = sum / static_cast<double>(samples);
    if (samples > 1) {
        const double var =
            (sum_sq - sum * sum / static_cast<double>(samples)) /
            static_cast<double>(samples - 1);
        result.stddev = var > 0 ? std::sqrt(var) : 0.0;
    } else {
        result.stddev = 0.0;
    }
    return result;
}

LevyReport levy_report(const CFExpansion& cf, std::size_t depth,
                       mpfr_prec_t bits) {
    LevyReport report{
        cf.period_length(),
        Int(0),
        Int(0),
        levy_exact(cf, bits),
        depth,
        levy_empirical(cf, depth, bits),
        levy_birkhoff(cf, bits),
        Real(bits),
        Real(bits),
    };
    const IntMatrix n1 = n0_n1(cf, 1).second;
    report.trace = n1.trace();
    report.det = n1.det();
    report.discrepancy_empirical = (report.exact - report.empirical).abs();
    report.discrepancy_birkhoff = (report.exact - report.birkhoff).abs();
    return report;
}

}  // namespace cfzeta
