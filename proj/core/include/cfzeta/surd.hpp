#pragma once

#include <array>
#include <cstddef>
#include <string>

#include "cfzeta/bigint.hpp"
#include "cfzeta/real.hpp"

namespace cfzeta {

/**
 * A real quadratic surd (p + sqrt(d)) / q held in a canonical integer form.
 *
 * Invariants maintained by every constructor and operation:
 *   - d > 0 and d is not a perfect square, so the value is irrational;
 *   - q != 0 and q divides d - p^2;
 *   - the triple (p, q, d) is the unique minimal-scale representative of the
 *     value, with the sign of q equal to the sign of the coefficient of the
 *     radical (so sqrt(d) always denotes the positive square root).
 *
 * Because the representation is unique per value, structural equality of the
 * fields decides value equality, and the type is usable as an ordered or
 * hashed map key.
 *
 * Values are immutable after construction and safe to share across threads.
 */
class QuadraticSurd {
public:
    /// Build the surd (p + sqrt(d)) / q.
    /// Throws std::invalid_argument if q = 0, d <= 0, or d is a perfect square.
    static QuadraticSurd make(const Int& p, const Int& q, const Int& d);

    /// Build the surd u + v*sqrt(d) from field coordinates; d need not be
    /// squarefree (its square part is folded into v).
    /// Throws std::invalid_argument if d <= 0 and std::domain_error if the
    /// value comes out rational (v = 0 or d a perfect square).
    static QuadraticSurd from_field(const Rat& u, const Rat& v, const Int& d);

    /// Canonical integer fields: the value is (p + sqrt(d)) / q.
    const Int& p() const { return p_; }
    const Int& q() const { return q_; }
    const Int& d() const { return d_; }

    /// Field coordinates: the value is u + v*sqrt(radicand_core()), with
    /// radicand_core() squarefree and shared by every member of the field.
    Rat u() const { return Rat(p_, q_); }
    Rat v() const { return Rat(scale_, q_); }
    const Int& radicand_core() const { return core_; }

    /// Greatest integer <= value, computed with integer square roots only.
    Int floor() const;

    /// Sign of the value: -1, 0 never occurs, +1.
    int sign() const;

    /// Sign of (value - r): -1 or +1 (never 0, the value is irrational).
    int compare_rat(const Rat& r) const;

    /// The conjugate u - v*sqrt(d0); an involution.
    QuadraticSurd galois_conjugate() const;

    /// Primitive integer polynomial a z^2 + b z + c with a > 0 vanishing at
    /// the value; {a, b, c} has gcd 1.
    std::array<Int, 3> minimal_polynomial() const;

    /// Approximate the value to the given precision; relative error below
    /// 2^(1-bits). Requires bits >= 53.
    Real to_real(mpfr_prec_t bits) const;

    QuadraticSurd neg() const;
    QuadraticSurd add_rat(const Rat& r) const;

    /// Multiply by a nonzero rational. Throws std::domain_error on r = 0.
    QuadraticSurd mul_rat(const Rat& r) const;

    /// 1 / value; total, since the value is never zero.
    QuadraticSurd invert() const;

    /// Product (respectively quotient) of two members of the same quadratic
    /// field. Throws std::domain_error when the operands live in different
    /// fields or when the result degenerates to a rational.
    QuadraticSurd mul(const QuadraticSurd& o) const;
    QuadraticSurd div(const QuadraticSurd& o) const;

    /// (a*x + b) / (c*x + d) for this surd x. Throws std::invalid_argument
    /// when a*d - b*c = 0 (the image would be constant, hence rational).
    QuadraticSurd mobius(const Int& a, const Int& b, const Int& c, const Int& d) const;

    bool operator==(const QuadraticSurd& o) const {
        return p_ == o.p_ && q_ == o.q_ && d_ == o.d_;
    }
    bool operator!=(const QuadraticSurd& o) const { return !(*this == o); }

    /// Structural order (by d, then q, then p); a total order usable for map
    /// keys, unrelated to the numeric order of values.
    bool operator<(const QuadraticSurd& o) const;

    std::size_t hash() const;

    /// Render as "(p+sqrt(d))/q", the text form the command line accepts.
    std::string to_string() const;

private:
    QuadraticSurd(Int p, Int q, Int d, Int core, Int scale);

    /// Minimal-scale canonical triple for u + v*sqrt(core), v != 0, core
    /// squarefree and > 1.
    static QuadraticSurd canonical(const Rat& u, const Rat& v, const Int& core);

    /// Sign of a + b*sqrt(d0) for rational a, b and positive non-square d0.
    static int sign_of(const Rat& a, const Rat& b, const Int& d0);

    Int p_, q_, d_;
    Int core_;   // squarefree part of d_
    Int scale_;  // d_ = core_ * scale_^2, sign(scale_) = sign(q_) * sign(v)
};

/// One step of the Gauss map x -> {1/x}: the emitted partial quotient
/// floor(1/x) and the exact fractional remainder.
struct GaussStep {
    Int quotient;
    QuadraticSurd next;
};

/// Apply the Gauss map to x with 0 < x < 1; quotient >= 1 and next in [0, 1).
/// Throws std::domain_error when x lies outside (0, 1).
GaussStep gauss_step(const QuadraticSurd& x);

std::ostream& operator<<(std::ostream& os, const QuadraticSurd& x);

}  // namespace cfzeta

template <>
struct std::hash<cfzeta::QuadraticSurd> {
    std::size_t operator()(const cfzeta::QuadraticSurd& x) const noexcept {
        return x.hash();
    }
};
