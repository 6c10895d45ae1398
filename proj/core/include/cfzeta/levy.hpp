#pragma once

#include <cstdint>
#include <vector>

#include "cfzeta/cont_frac.hpp"
#include "cfzeta/real.hpp"
#include "cfzeta/surd.hpp"

namespace cfzeta {

/// Exact spectral formula: (1/l) log lambda with lambda the dominant root
/// of the characteristic polynomial of the level-1 periodic matrix N1,
/// solved exactly as a surd and logged at the requested precision.
Real levy_exact(const CFExpansion& cf, mpfr_prec_t bits = 128);

/// Empirical growth rate (1/n) log q_n with q_n computed exactly.
/// Requires n >= 2.
Real levy_empirical(const CFExpansion& cf, std::size_t n,
                    mpfr_prec_t bits = 128);

/// Birkhoff average over the periodic Gauss orbit of the purely periodic
/// tail: -(1/l) sum of log T^s(tail) for s = 0..l-1, each orbit point an
/// exact surd evaluated at high precision.
Real levy_birkhoff(const CFExpansion& cf, mpfr_prec_t bits = 128);

/// The renormalisation intervals Delta_i = |q_i x - p_i| for i = 0..n as
/// exact surds (Delta_0 = x). Before returning, certifies the product
/// identity Delta_n / Delta_0 = product of T^m(x), m = 1..n, bit-exactly
/// in surd arithmetic for every index. Requires 0 < x < 1.
std::vector<QuadraticSurd> renorm_intervals(const QuadraticSurd& x,
                                            std::size_t n);

struct MonteCarloResult {
    double mean;
    double stddev;  // sample standard deviation; 0 when samples == 1
};

/// Monte Carlo check of the almost-everywhere growth constant
/// pi^2 / (12 log 2): draws uniform exact rationals with about 1.8*depth
/// decimal digits in the denominator, expands each by the integer
/// Euclidean algorithm to `depth` partial quotients, and averages
/// (1/depth) log q_depth. The per-sample generator is split from the seed,
/// so equal seeds give identical results. Requires samples >= 1 and
/// depth >= 100.
MonteCarloResult levy_ae_montecarlo(std::size_t samples, std::size_t depth,
                                    std::uint64_t seed);

/**
 * The four-way comparison bundle: the exact constant with its symbolic
 * data (period length and characteristic polynomial of the periodic
 * matrix), the empirical depth-n value, the Birkhoff average, and the
 * absolute discrepancies against the exact value.
 */
struct LevyReport {
    std::size_t ell;
    Int trace;       // of the level-1 periodic matrix
    Int det;         // likewise; the char poly is x^2 - trace x + det
    Real exact;
    std::size_t depth;
    Real empirical;
    Real birkhoff;
    Real discrepancy_empirical;
    Real discrepancy_birkhoff;
};

LevyReport levy_report(const CFExpansion& cf, std::size_t depth,
                       mpfr_prec_t bits = 128);

}  // namespace cfzeta
