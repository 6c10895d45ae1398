#include "cfzeta/torus.hpp"

#include <algorithm>
#include <stdexcept>

#include "cfzeta/surd.hpp"

namespace cfzeta {

namespace {

using boost::multiprecision::abs;

// Dominant eigenvalue modulus (|tr| + sqrt(tr^2 - 4 det)) / 2 as an exact
// surd; the discriminant of a hyperbolic matrix is never a perfect square.
QuadraticSurd spectral_radius_surd(const ToralAutomorphism& f) {
    const Int tr = abs(f.trace());
    const Int disc = tr * tr - 4 * f.det();
    return QuadraticSurd::make(tr, 2, disc);
}

std::size_t minimal_block_period(const std::vector<Int>& block) {
    const std::size_t n = block.size();
    for (std::size_t d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        bool repeats = true;
        for (std::size_t i = d; i < n && repeats; ++i) {
            repeats = block[i] == block[i - d];
        }
        if (repeats) return d;
    }
    return n;
}

}  // namespace

ToralAutomorphism::ToralAutomorphism(IntMatrix m) : m_(std::move(m)) {
    if (m_.rows() != 2 || m_.cols() != 2) {
        throw std::invalid_argument("toral automorphism matrix must be 2x2");
    }
    const Int d = m_.det();
    if (d != 1 && d != -1) {
        throw std::invalid_argument(
            "toral automorphism matrix must have determinant +1 or -1");
    }
    const Int tr = m_.trace();
    const bool hyperbolic = (d == 1) ? (tr > 2 || tr < -2) : (tr != 0);
    if (!hyperbolic) {
        throw std::invalid_argument(
            "matrix is not hyperbolic: an eigenvalue lies on the unit circle");
    }
}

ToralAutomorphism from_quadratic(const CFExpansion& cf) {
    const auto [n0, n1] = n0_n1(cf, 1);
    return ToralAutomorphism(n0 * n1 * n0.unimodular_inverse());
}

Int fix_count(const ToralAutomorphism& f, unsigned long n) {
    if (n == 0) {
        throw std::invalid_argument("iterate count must be >= 1");
    }
    const IntMatrix mn = f.matrix().pow(n);
    const Int d = (IntMatrix::identity(2) - mn).det();
    return abs(d);
}

std::vector<std::pair<Rat, Rat>> fix_points_bruteforce(
    const ToralAutomorphism& f, unsigned long n) {
    if (n == 0) {
        throw std::invalid_argument("iterate count must be >= 1");
    }
    const Int count = fix_count(f, n);
    if (count > 1000000) {
        throw std::domain_error(
            "brute-force fixed-point enumeration refuses more than 10^6 "
            "points; use fix_count instead");
    }
    const IntMatrix a = f.matrix().pow(n) - IntMatrix::identity(2);
    const Int det_a = a.det();
    const Int big_d = abs(det_a);
    const Int sign_d = det_a > 0 ? Int(1) : Int(-1);

    // Bounding box of the image parallelogram a * [0,1)^2: the corner
    // images are 0, a*e1, a*e2 and a*(e1+e2).
    Int xs[4] = {0, a.at(0, 0), a.at(0, 1), a.at(0, 0) + a.at(0, 1)};
    Int ys[4] = {0, a.at(1, 0), a.at(1, 1), a.at(1, 0) + a.at(1, 1)};
    const Int xmin = *std::min_element(xs, xs + 4);
    const Int xmax = *std::max_element(xs, xs + 4);
    const Int ymin = *std::min_element(ys, ys + 4);
    const Int ymax = *std::max_element(ys, ys + 4);

    // x = a^{-1} v = adj(a) v / det(a); a lattice point v is accepted when
    // both coordinates of sign(det) * adj(a) v land in [0, |det|). Walk the
    // narrower box axis and solve those two inequalities for the other
    // coordinate, so the work is O(range + count), not the box area.
    const IntMatrix adj = a.adjugate();
    const Int c0o = sign_d * adj.at(0, 0), c0i = sign_d * adj.at(0, 1);
    const Int c1o = sign_d * adj.at(1, 0), c1i = sign_d * adj.at(1, 1);
    const bool outer_is_x = xmax - xmin <= ymax - ymin;
    const Int omin = outer_is_x ? xmin : ymin;
    const Int omax = outer_is_x ? xmax : ymax;
    const Int imin = outer_is_x ? ymin : xmin;
    const Int imax = outer_is_x ? ymax : xmax;

    // Interval of w with 0 <= c*w + b < big_d, clamped to [lo, hi].
    const auto clamp_interval = [&big_d](const Int& c, const Int& b, Int& lo,
                                         Int& hi) {
        if (c == 0) {
            if (b < 0 || b >= big_d) hi = lo - 1;
            return;
        }
        if (c > 0) {
            const Int l = floor_div(-b + c - 1, c);
            const Int h = floor_div(big_d - 1 - b, c);
            if (l > lo) lo = l;
            if (h < hi) hi = h;
        } else {
            const Int m = -c;
            const Int l = floor_div(b - big_d + 1 + m - 1, m);
            const Int h = floor_div(b, m);
            if (l > lo) lo = l;
            if (h < hi) hi = h;
        }
    };

    std::vector<std::pair<Rat, Rat>> points;
    for (Int w = omin; w <= omax; ++w) {
        // With the outer coordinate fixed, each acceptance condition is
        // linear in the inner one.
        const Int b0 = (outer_is_x ? c0o : c0i) * w;
        const Int b1 = (outer_is_x ? c1o : c1i) * w;
        Int lo = imin, hi = imax;
        clamp_interval(outer_is_x ? c0i : c0o, b0, lo, hi);
        clamp_interval(outer_is_x ? c1i : c1o, b1, lo, hi);
        for (Int u = lo; u <= hi; ++u) {
            const Int vx = outer_is_x ? w : u;
            const Int vy = outer_is_x ? u : w;
            const Rat x(adj.at(0, 0) * vx + adj.at(0, 1) * vy, det_a);
            const Rat y(adj.at(1, 0) * vx + adj.at(1, 1) * vy, det_a);
            points.emplace_back(x, y);
        }
    }
    std::sort(points.begin(), points.end());
    return points;
}

Real entropy(const ToralAutomorphism& f, mpfr_prec_t bits) {
    const mpfr_prec_t work = bits + 32;
    return spectral_radius_surd(f).to_real(work).log().rounded(bits);
}

RationalFunction zeta(const ToralAutomorphism& f) {
    const Int tr = f.trace();
    const Int det = f.det();
    // Positive dominant eigenvalue: exp of the fixed-point series telescopes
    // to (1-z)(1-det z) / (1 - tr z + det z^2). A negative dominant
    // eigenvalue flips the sign of every odd coefficient, i.e. z -> -z.
    const Rat sign = (tr > 0) ? Rat(1) : Rat(-1);
    const Polynomial num =
        Polynomial(std::vector<Rat>{Rat(1), -sign}) *
        Polynomial(std::vector<Rat>{Rat(1), -sign * Rat(det)});
    const Polynomial den(std::vector<Rat>{Rat(1), -sign * Rat(tr), Rat(det)});
    return RationalFunction(num, den);
}

PowerSeries zeta_series(const ToralAutomorphism& f, std::size_t order) {
    if (order < 1) {
        throw std::invalid_argument("series order must be >= 1");
    }
    std::vector<Rat> log_coeffs(order + 1, Rat(0));
    IntMatrix mn = IntMatrix::identity(2);
    for (std::size_t n = 1; n <= order; ++n) {
        mn = mn * f.matrix();
        const Int d = (IntMatrix::identity(2) - mn).det();
        const Int count = abs(d);
        log_coeffs[n] = Rat(count, Int(n));
    }
    return PowerSeries(std::move(log_coeffs), order).exp();
}

PrimalityReport prime_case_for_block(const std::vector<Int>& block) {
    if (block.empty()) {
        throw std::invalid_argument("quotient block must be nonempty");
    }
    for (const Int& a : block) {
        if (a < 1) {
            throw std::invalid_argument("partial quotients must be >= 1");
        }
    }
    if (block.size() % 2 != 0) return {false, PrimeCase::None};
    const std::size_t minimal = minimal_block_period(block);
    if (block.size() == minimal) return {true, PrimeCase::A};
    if (block.size() == 2 * minimal && minimal % 2 == 1) {
        return {true, PrimeCase::B};
    }
    return {false, PrimeCase::None};
}

PrimalityReport is_prime_hyperbolic(const CFExpansion& cf) {
    std::vector<Int> block = cf.period();
    if (block.size() % 2 != 0) {
        block.insert(block.end(), cf.period().begin(), cf.period().end());
    }
    return prime_case_for_block(block);
}

NormLength norm_and_geodesic_length(const ToralAutomorphism& f,
                                    mpfr_prec_t bits) {
    const mpfr_prec_t work = bits + 32;
    // t + 1/t = |tr| (det +1) or t - 1/t = |tr| (det -1); either way t is
    // the dominant eigenvalue modulus (|tr| + sqrt(tr^2 - 4 det)) / 2.
    const QuadraticSurd t = spectral_radius_surd(f);
    const QuadraticSurd norm = t.mul(t);
    const Real norm_real = norm.to_real(work);
    return {norm_real.rounded(bits), norm_real.log().rounded(bits)};
}

}  // namespace cfzeta
