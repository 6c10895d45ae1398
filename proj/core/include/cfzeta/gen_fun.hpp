#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "cfzeta/cont_frac.hpp"
#include "cfzeta/power_series.hpp"
#include "cfzeta/real.hpp"
#include "cfzeta/rf_matrix.hpp"
#include "cfzeta/surd.hpp"

namespace cfzeta {

/**
 * The closed-form generating functions of convergent monomials at level r:
 * entry s is the rational function whose Taylor coefficient of z^n equals
 * p_n^(r-s) * q_n^s. For r = 1 the two entries are the generating
 * functions of the convergent numerators and denominators themselves.
 */
struct GenFunVector {
    std::size_t r;
    std::vector<RationalFunction> entries;  // size r + 1, entry s as above
};

/// Closed form via the periodic matrix identity: P0(z) plus
/// (id - z^l N0 N1 N0^{-1})^{-1} applied to P1(z), all at level r.
/// Requires 1 <= r <= 4 (symbolic inversion cost grows quickly with r).
GenFunVector generating_vector(const CFExpansion& cf, std::size_t r);

/// The two polynomial vectors feeding the closed form: entry s of P0 sums
/// p_n^(r-s) q_n^s z^n over the preperiod indices 0 <= n < k, and P1 over
/// the first period block k <= n < k+l. Requires r >= 1.
std::pair<std::vector<Polynomial>, std::vector<Polynomial>> p0_p1(
    const CFExpansion& cf, std::size_t r);

/// Oracle: the same series computed term by term from the convergent
/// recurrence, truncated at order n. Requires 0 <= s <= r, r >= 1.
PowerSeries direct_series(const CFExpansion& cf, std::size_t r, std::size_t s,
                          std::size_t order);

/// Radius of convergence of every entry at level r: the dominant
/// eigenvalue of the level-r periodic matrix, to the power -1/l. Exact
/// quadratic root for r = 1; certified rational enclosure by power
/// iteration (relative width below 2^-48) for r >= 2. Requires 1 <= r <= 4.
Real radius_of_convergence(const CFExpansion& cf, std::size_t r,
                           mpfr_prec_t bits = 128);

struct ShiftIdentityReport {
    bool passed;
    std::size_t steps;
    std::size_t level;
    std::size_t order;
    std::string detail;
};

/// Verifies, coefficient by coefficient on truncated series, that the
/// level-r generating vector of x equals the first m monomial terms plus
/// z^m E(a_1;r)...E(a_m;r) applied to the generating vector of the m-fold
/// Gauss shift of x. Requires 0 < x < 1 and m <= order; m = 0 passes
/// trivially. Mismatches are reported, not thrown.
ShiftIdentityReport shift_identity_check(const QuadraticSurd& x, std::size_t m,
                                         std::size_t r, std::size_t order);

}  // namespace cfzeta
