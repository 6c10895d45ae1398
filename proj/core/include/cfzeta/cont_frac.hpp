#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "cfzeta/bigint.hpp"
#include "cfzeta/int_matrix.hpp"
#include "cfzeta/surd.hpp"

namespace cfzeta {

/**
 * Eventually periodic simple continued fraction of a quadratic surd in (0,1):
 * [0; a_1, ..., a_k, (a_{k+1}, ..., a_{k+l})] with the parenthesized block
 * repeating forever.
 *
 * Invariants: every partial quotient is >= 1, the period is nonempty and of
 * minimal length (no proper divisor of l reproduces the same tail), and the
 * preperiod is of minimal length (its last entry differs from the period's
 * last entry). The constructor canonicalizes any valid input to this form.
 */
class CFExpansion {
public:
    CFExpansion(std::vector<Int> preperiod, std::vector<Int> period);

    /// Expand a surd with 0 < x < 1 by iterating the Gauss map and detecting
    /// the first repeated complete quotient; the result is automatically
    /// minimal in both k and l. Throws std::domain_error outside (0,1).
    static CFExpansion expand(const QuadraticSurd& x);

    const std::vector<Int>& preperiod() const { return pre_; }
    const std::vector<Int>& period() const { return per_; }
    std::size_t preperiod_length() const { return pre_.size(); }
    std::size_t period_length() const { return per_.size(); }

    /// Partial quotient a_n for n >= 1.
    Int quotient(std::size_t n) const;

    /// The surd whose expansion this is; inverse of expand().
    QuadraticSurd value() const;

    /// Expansion of the Gauss-map image (the tail after dropping a_1).
    CFExpansion shifted() const;

    bool operator==(const CFExpansion& o) const {
        return pre_ == o.pre_ && per_ == o.per_;
    }
    bool operator!=(const CFExpansion& o) const { return !(*this == o); }

    /// Render as "[a1,a2,...;(b1,b2,...)]", the text form the command line
    /// accepts; "[;(b1,...)]" when purely periodic.
    std::string to_string() const;

private:
    std::vector<Int> pre_;
    std::vector<Int> per_;
};

/// First n convergents (p_0,q_0)=(0,1), (p_1,q_1)=(1,a_1), then
/// p_i = a_i p_{i-1} + p_{i-2} and likewise for q. Every pair is coprime.
/// Requires n >= 1.
std::vector<std::pair<Int, Int>> convergents(const CFExpansion& cf, std::size_t n);

/// The (r+1)x(r+1) matrix E(a;r): entry (i,j) equals C(i, i+j-r) a^{i+j-r}
/// when i+j >= r and 0 otherwise (rows and columns 0-based). E(a;1) is
/// [[0,1],[1,a]], the convergent-recurrence matrix. Requires a >= 1, r >= 1.
IntMatrix e_matrix(const Int& a, std::size_t r);

/// Factorization E(a;r) = R * U with R the anti-diagonal permutation and
/// U the unipotent upper-triangular matrix with entries C(r-i, j-i) a^(j-i).
std::pair<IntMatrix, IntMatrix> e_factorization(const Int& a, std::size_t r);

/// Products of E(.;r) over the preperiod (N0, identity when k=0) and over
/// one period (N1). Both have determinant +1 or -1.
std::pair<IntMatrix, IntMatrix> n0_n1(const CFExpansion& cf, std::size_t r);

/// The four entries of E(a_{n-m};1) *...* E(a_n;1):
///   [[b_m, b_m1], [a_m, a_m1]]
/// These satisfy p_{n-1} = a_m p_{n-m-1} + b_m p_{n-m-2} and
/// p_n = a_m1 p_{n-m-1} + b_m1 p_{n-m-2} (same for q), and are periodic in n
/// with period l once n - m > k. Requires 1 <= n and m <= n-1.
struct ABCoefficients {
    Int a_m, a_m1, b_m, b_m1;
};
ABCoefficients ab_coefficients(const CFExpansion& cf, std::size_t n, std::size_t m);

std::ostream& operator<<(std::ostream& os, const CFExpansion& cf);

}  // namespace cfzeta
