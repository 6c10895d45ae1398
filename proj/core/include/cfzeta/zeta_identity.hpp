#pragma once

#include <cstddef>
#include <optional>

#include "cfzeta/cont_frac.hpp"
#include "cfzeta/rf_matrix.hpp"

namespace cfzeta {

/**
 * The four 2x2 matrix rational functions tying convergent generating
 * functions to the dynamical zeta function:
 *   u = z^k E(a_1)...E(a_k)               (identity when k = 0),
 *   v = sum over m < l of z^m E(a_{k+1})...E(a_{k+m+1}),
 *   y = sum over n < k of z^n E(a_1)...E(a_{n+1})   (zero when k = 0),
 *   x = [[F_p, (F_p - p_0)/z], [F_q, (F_q - q_0)/z]] from the closed-form
 *       generating functions at level 1.
 */
struct UVXY {
    RFMatrix u;
    RFMatrix v;
    RFMatrix x;
    RFMatrix y;
};

/// Builds the four matrices and certifies x's closed form against the
/// direct convergent series through the given order, which must be at
/// least 2(k+l)+4 so the comparison pins the rational function uniquely.
UVXY uvxy(const CFExpansion& cf, std::size_t order);

/// W(z) = (id - z^l N1)^{-1} at level 1: the closed form of the series
/// sum of z^{nl} N1^n.
RFMatrix w_direct(const CFExpansion& cf);

/// The same matrix assembled the long way round: u^{-1} (x - y) v^{-1}.
/// Throws domain_error with the det v polynomial in the message if v is
/// singular as a rational-function matrix (it never is; see det_v).
RFMatrix w_from_uvxy(const CFExpansion& cf);

/// Determinant of v, an integer-coefficient polynomial of degree at most
/// 2l - 1. For period length 1 it is the constant -1.
Polynomial det_v(const CFExpansion& cf);

/**
 * Outcome of the central identity: lhs is the zeta-function side
 * 2 + z^l (log zeta_f)'(z^l) + z^l/(1-z^l) + (-z)^l/(1-(-z)^l), rhs is
 * trace(u^{-1}(x-y)v^{-1}). equal_exact compares canonical forms; the
 * series of both sides are additionally compared through
 * series_checked_to, and witness records the first differing coefficient
 * order if any (absent whenever equal_exact holds).
 */
struct IdentityReport {
    RationalFunction lhs;
    RationalFunction rhs;
    bool equal_exact;
    std::size_t series_checked_to;
    std::optional<std::size_t> witness;
};

/// Verifies the central identity for one continued fraction. Requires
/// order >= 10. Failures are reported, never thrown.
IdentityReport main_identity_check(const CFExpansion& cf, std::size_t order);

}  // namespace cfzeta
