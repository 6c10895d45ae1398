#include "cfzeta/cont_frac.hpp"

#include <boost/multiprecision/gmp.hpp>

#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace cfzeta {

namespace {

Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.backend().data(), n, k);
    return r;
}

Int int_pow(const Int& a, unsigned long e) {
    return boost::multiprecision::pow(a, static_cast<unsigned>(e));
}

void check_quotients(const std::vector<Int>& qs, const char* what) {
    for (const Int& a : qs) {
        if (a < 1) {
            throw std::invalid_argument(std::string(what) +
                                        " partial quotients must be >= 1");
        }
    }
}

}  // namespace

CFExpansion::CFExpansion(std::vector<Int> preperiod, std::vector<Int> period)
    : pre_(std::move(preperiod)), per_(std::move(period)) {
    if (per_.empty()) {
        throw std::invalid_argument("continued fraction period must be nonempty");
    }
    check_quotients(pre_, "preperiod");
    check_quotients(per_, "period");

    // Shrink the period to its primitive length: the smallest divisor d of l
    // such that the block repeats with period d.
    const std::size_t l = per_.size();
    for (std::size_t d = 1; d < l; ++d) {
        if (l % d != 0) continue;
        bool repeats = true;
        for (std::size_t i = d; i < l && repeats; ++i) {
            repeats = per_[i] == per_[i % d];
        }
        if (repeats) {
            per_.resize(d);
            break;
        }
    }

    // Shrink the preperiod: while its last entry matches the period's last
    // entry, the boundary can be rolled one step left (rotating the period).
    while (!pre_.empty() && pre_.back() == per_.back()) {
        per_.insert(per_.begin(), per_.back());
        per_.pop_back();
        pre_.pop_back();
    }
}

CFExpansion CFExpansion::expand(const QuadraticSurd& x) {
    // Walk the Gauss orbit, recording each complete quotient. Complete
    // quotients are canonical surds, so the first structural repeat is the
    // first value repeat; states x_0..x_{n-1} are distinct when x_n = x_i,
    // which makes k = i and l = n - i minimal.
    std::map<QuadraticSurd, std::size_t> seen;
    std::vector<Int> quotients;
    QuadraticSurd state = x;
    for (;;) {
        auto [it, fresh] = seen.emplace(state, quotients.size());
        if (!fresh) {
            const std::size_t k = it->second;
            std::vector<Int> pre(quotients.begin(), quotients.begin() + k);
            std::vector<Int> per(quotients.begin() + k, quotients.end());
            return CFExpansion(std::move(pre), std::move(per));
        }
        GaussStep step = gauss_step(state);
        quotients.push_back(std::move(step.quotient));
        state = std::move(step.next);
    }
}

Int CFExpansion::quotient(std::size_t n) const {
    if (n == 0) {
        throw std::invalid_argument("partial quotients are indexed from 1");
    }
    if (n <= pre_.size()) return pre_[n - 1];
    return per_[(n - pre_.size() - 1) % per_.size()];
}

QuadraticSurd CFExpansion::value() const {
    // The purely periodic tail t = [0; (a_{k+1..k+l})] is fixed by the mobius
    // action of N1 = E(a_{k+1};1)...E(a_{k+l};1): with N1 = [[A,B],[C,D]],
    // t solves C t^2 + (D - A) t - B = 0. C >= 1 and B >= 1, so the roots
    // have opposite signs and the tail is the positive one, which is the
    // +sqrt branch.
    auto [n0, n1] = n0_n1(*this, 1);
    const Int& a = n1.at(0, 0);
    const Int& b = n1.at(0, 1);
    const Int& c = n1.at(1, 0);
    const Int& d = n1.at(1, 1);
    const Int disc = (d - a) * (d - a) + 4 * b * c;
    QuadraticSurd tail = QuadraticSurd::make(a - d, 2 * c, disc);
    if (pre_.empty()) return tail;
    // Undo the k Gauss steps: x = (N0[0][0] t + N0[0][1]) / (N0[1][0] t + N0[1][1]).
    return tail.mobius(n0.at(0, 0), n0.at(0, 1), n0.at(1, 0), n0.at(1, 1));
}

CFExpansion CFExpansion::shifted() const {
    if (!pre_.empty()) {
        return CFExpansion(std::vector<Int>(pre_.begin() + 1, pre_.end()), per_);
    }
    std::vector<Int> rotated(per_.begin() + 1, per_.end());
    rotated.push_back(per_.front());
    return CFExpansion({}, std::move(rotated));
}

std::string CFExpansion::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < pre_.size(); ++i) {
        os << (i ? "," : "") << pre_[i];
    }
    os << ";(";
    for (std::size_t i = 0; i < per_.size(); ++i) {
        os << (i ? "," : "") << per_[i];
    }
    os << ")]";
    return os.str();
}

std::vector<std::pair<Int, Int>> convergents(const CFExpansion& cf, std::size_t n) {
    if (n < 1) {
        throw std::invalid_argument("convergent count must be >= 1");
    }
    std::vector<std::pair<Int, Int>> out;
    out.reserve(n);
    out.emplace_back(0, 1);
    if (n == 1) return out;
    out.emplace_back(1, cf.quotient(1));
    for (std::size_t i = 2; i < n; ++i) {
        const Int a = cf.quotient(i);
        out.emplace_back(a * out[i - 1].first + out[i - 2].first,
                         a * out[i - 1].second + out[i - 2].second);
    }
    return out;
}

IntMatrix e_matrix(const Int& a, std::size_t r) {
    if (a < 1) {
        throw std::invalid_argument("e_matrix requires a >= 1");
    }
    if (r < 1) {
        throw std::invalid_argument("e_matrix requires r >= 1");
    }
    IntMatrix e(r + 1, r + 1);
    for (std::size_t i = 0; i <= r; ++i) {
        for (std::size_t j = (i >= r ? 0 : r - i); j <= r; ++j) {
            const std::size_t t = i + j - r;
            e.at(i, j) = binomial(i, t) * int_pow(a, t);
        }
    }
    return e;
}

std::pair<IntMatrix, IntMatrix> e_factorization(const Int& a, std::size_t r) {
    if (a < 1) {
        throw std::invalid_argument("e_factorization requires a >= 1");
    }
    if (r < 1) {
        throw std::invalid_argument("e_factorization requires r >= 1");
    }
    IntMatrix rev(r + 1, r + 1);
    IntMatrix u(r + 1, r + 1);
    for (std::size_t i = 0; i <= r; ++i) {
        rev.at(i, r - i) = 1;
        for (std::size_t j = i; j <= r; ++j) {
            u.at(i, j) = binomial(r - i, j - i) * int_pow(a, j - i);
        }
    }
    return {std::move(rev), std::move(u)};
}

std::pair<IntMatrix, IntMatrix> n0_n1(const CFExpansion& cf, std::size_t r) {
    if (r < 1) {
        throw std::invalid_argument("n0_n1 requires r >= 1");
    }
    IntMatrix n0 = IntMatrix::identity(r + 1);
    for (const Int& a : cf.preperiod()) n0 = n0 * e_matrix(a, r);
    IntMatrix n1 = IntMatrix::identity(r + 1);
    for (const Int& a : cf.period()) n1 = n1 * e_matrix(a, r);
    return {std::move(n0), std::move(n1)};
}

ABCoefficients ab_coefficients(const CFExpansion& cf, std::size_t n, std::size_t m) {
    if (n < 1 || m > n - 1) {
        throw std::invalid_argument("ab_coefficients requires 1 <= n and m <= n-1");
    }
    IntMatrix prod = IntMatrix::identity(2);
    for (std::size_t i = n - m; i <= n; ++i) {
        prod = prod * e_matrix(cf.quotient(i), 1);
    }
    return {prod.at(1, 0), prod.at(1, 1), prod.at(0, 0), prod.at(0, 1)};
}

std::ostream& operator<<(std::ostream& os, const CFExpansion& cf) {
    return os << cf.to_string();
}

}  // namespace cfzeta
