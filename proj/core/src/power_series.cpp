#include "cfzeta/power_series.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace cfzeta {

PowerSeries::PowerSeries(std::size_t order) : c_(order + 1, Rat(0)) {}

PowerSeries::PowerSeries(std::vector<Rat> coeffs, std::size_t order)
    : c_(std::move(coeffs)) {
    c_.resize(order + 1, Rat(0));
}

PowerSeries PowerSeries::expand(const RationalFunction& f, std::size_t order) {
    return PowerSeries(f.taylor(order), order);
}

const Rat& PowerSeries::coeff(std::size_t i) const {
    if (i >= c_.size()) {
        throw std::out_of_range("power series coefficient beyond truncation order");
    }
    return c_[i];
}

PowerSeries PowerSeries::operator+(const PowerSeries& rhs) const {
    const std::size_t n = std::min(c_.size(), rhs.c_.size());
    PowerSeries r(n - 1);
    for (std::size_t i = 0; i < n; ++i) r.c_[i] = c_[i] + rhs.c_[i];
    return r;
}

PowerSeries PowerSeries::operator-(const PowerSeries& rhs) const {
    const std::size_t n = std::min(c_.size(), rhs.c_.size());
    PowerSeries r(n - 1);
    for (std::size_t i = 0; i < n; ++i) r.c_[i] = c_[i] - rhs.c_[i];
    return r;
}

PowerSeries PowerSeries::operator*(const PowerSeries& rhs) const {
    const std::size_t n = std::min(c_.size(), rhs.c_.size());
    PowerSeries r(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; i + j < n; ++j) {
            r.c_[i + j] += c_[i] * rhs.c_[j];
        }
    }
    return r;
}

PowerSeries PowerSeries::operator-() const {
    PowerSeries r(order());
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = -c_[i];
    return r;
}

PowerSeries PowerSeries::scaled(const Rat& c) const {
    PowerSeries r(order());
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] * c;
    return r;
}

PowerSeries PowerSeries::inverse() const {
    if (c_[0] == 0) {
        throw std::domain_error(
            "power series inverse requires a nonzero constant term");
    }
    PowerSeries r(order());
    r.c_[0] = Rat(1) / c_[0];
    for (std::size_t n = 1; n < c_.size(); ++n) {
        Rat acc(0);
        for (std::size_t j = 1; j <= n; ++j) acc += c_[j] * r.c_[n - j];
        r.c_[n] = -acc / c_[0];
    }
    return r;
}

PowerSeries PowerSeries::exp() const {
    if (c_[0] != 0) {
        throw std::domain_error(
            "power series exp requires a zero constant term");
    }
    PowerSeries e(order());
    e.c_[0] = Rat(1);
    for (std::size_t n = 1; n < c_.size(); ++n) {
        Rat acc(0);
        for (std::size_t j = 1; j <= n; ++j) {
            if (c_[j] == 0) continue;
            acc += Rat(j) * c_[j] * e.c_[n - j];
        }
        e.c_[n] = acc / Rat(n);
    }
    return e;
}

PowerSeries PowerSeries::truncated(std::size_t order) const {
    if (order >= c_.size()) {
        throw std::out_of_range(
            "power series truncation beyond the known order");
    }
    std::vector<Rat> v(c_.begin(), c_.begin() + static_cast<long>(order) + 1);
    return PowerSeries(std::move(v), order);
}

std::string PowerSeries::to_string(const char* var) const {
    std::string out = "[";
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i > 0) out += ", ";
        out += cfzeta::to_string(c_[i]);
    }
    out += "] + O(";
    out += var;
    out += "^" + std::to_string(c_.size()) + ")";
    return out;
}

std::ostream& operator<<(std::ostream& os, const PowerSeries& s) {
    return os << s.to_string();
}

}  // namespace cfzeta
