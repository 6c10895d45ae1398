#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "cfzeta/cont_frac.hpp"
#include "cfzeta/int_matrix.hpp"
#include "cfzeta/power_series.hpp"
#include "cfzeta/rational_function.hpp"
#include "cfzeta/real.hpp"

namespace cfzeta {

/**
 * A hyperbolic automorphism of the 2-torus: a 2x2 integer matrix with
 * determinant +1 or -1 and no eigenvalue on the unit circle (determinant
 * +1 forces |trace| > 2, determinant -1 forces trace != 0). Acts on
 * [0,1)^2 by matrix multiplication mod 1.
 */
class ToralAutomorphism {
public:
    explicit ToralAutomorphism(IntMatrix m);

    const IntMatrix& matrix() const { return m_; }
    Int trace() const { return m_.trace(); }
    Int det() const { return m_.det(); }

private:
    IntMatrix m_;
};

/// The automorphism induced by a quadratic irrational: conjugate the
/// periodic-part matrix by the preperiod matrix, N0 N1 N0^{-1} at level 1.
ToralAutomorphism from_quadratic(const CFExpansion& cf);

/// Number of fixed points of the n-th iterate: |det(id - M^n)|, exactly.
Int fix_count(const ToralAutomorphism& f, unsigned long n);

/// Independent oracle: enumerates every x in [0,1)^2 with (M^n - id)x
/// integral, by scanning integer vectors in the image parallelogram's
/// bounding box and solving exactly over the rationals. Points come back
/// sorted lexicographically. Guard: refuses when the count exceeds 10^6.
std::vector<std::pair<Rat, Rat>> fix_points_bruteforce(
    const ToralAutomorphism& f, unsigned long n);

/// Topological entropy log(spectral radius), with the spectral radius
/// solved exactly from the quadratic characteristic polynomial.
Real entropy(const ToralAutomorphism& f, mpfr_prec_t bits = 128);

/// The dynamical zeta function exp(sum fix_count(f,n) z^n / n) in closed
/// form. For positive trace it is (1-z)(1-det z) / det(id - zM); negative
/// trace twists z -> -z. Certified against zeta_series by the test suite.
RationalFunction zeta(const ToralAutomorphism& f);

/// Oracle for zeta: exponentiate the truncated fixed-point series.
PowerSeries zeta_series(const ToralAutomorphism& f, std::size_t order);

enum class PrimeCase { A, B, None };

struct PrimalityReport {
    bool prime;
    PrimeCase which;
};

/// Arithmetic primality criterion for the block of partial quotients
/// generating an automorphism: the block length must be even and either
/// equal to the minimal period (case A) or twice an odd minimal period
/// (case B). The block is taken literally, without canonicalization.
PrimalityReport prime_case_for_block(const std::vector<Int>& block);

/// The criterion applied to a continued fraction's canonical period,
/// doubled first when its length is odd (which always lands in case B).
PrimalityReport is_prime_hyperbolic(const CFExpansion& cf);

struct NormLength {
    Real norm;
    Real length;
};

/// Norm and geodesic length of the conjugacy class: solve t + 1/t = |tr|
/// (determinant +1) or t - 1/t = |tr| (determinant -1) for t > 1; the norm
/// is t^2 and the length is log(t^2) = 2 log t = 2 * entropy.
NormLength norm_and_geodesic_length(const ToralAutomorphism& f,
                                    mpfr_prec_t bits = 128);

}  // namespace cfzeta
