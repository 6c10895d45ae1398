#include "cfzeta/rf_matrix.hpp"

#include <ostream>
#include <stdexcept>
#include <utility>

namespace cfzeta {

namespace {

// Determinant of a small matrix by cofactor expansion along the first row.
RationalFunction det_small(const std::vector<std::vector<RationalFunction>>& w) {
    const std::size_t n = w.size();
    if (n == 1) return w[0][0];
    if (n == 2) return w[0][0] * w[1][1] - w[0][1] * w[1][0];
    RationalFunction acc;
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::vector<RationalFunction>> minor(n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor[i - 1].push_back(w[i][c]);
            }
        }
        const RationalFunction term = w[0][j] * det_small(minor);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

// Fraction-free Bareiss determinant over the polynomial ring; every
// division is exact by the Sylvester identity.
Polynomial poly_det_bareiss(std::vector<std::vector<Polynomial>> w) {
    const std::size_t n = w.size();
    if (n == 1) return w[0][0];
    bool negate = false;
    Polynomial prev = Polynomial::constant(Rat(1));
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (w[k][k].is_zero()) {
            std::size_t s = k + 1;
            while (s < n && w[s][k].is_zero()) ++s;
            if (s == n) return Polynomial();
            std::swap(w[k], w[s]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                const Polynomial t = w[i][j] * w[k][k] - w[i][k] * w[k][j];
                w[i][j] = t.divrem(prev).first;
            }
            w[i][k] = Polynomial();
        }
        prev = w[k][k];
    }
    Polynomial d = w[n - 1][n - 1];
    return negate ? -d : d;
}

}  // namespace

RFMatrix::RFMatrix(std::size_t n) : n_(n), e_(n * n) {
    if (n == 0) {
        throw std::invalid_argument("matrix dimension must be >= 1");
    }
}

RFMatrix RFMatrix::identity(std::size_t n) {
    RFMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = RationalFunction::one();
    return m;
}

RFMatrix RFMatrix::lift(const IntMatrix& m) {
    if (m.rows() != m.cols()) {
        throw std::invalid_argument("lifted integer matrix must be square");
    }
    RFMatrix r(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            r.at(i, j) = RationalFunction::constant(Rat(m.at(i, j)));
        }
    }
    return r;
}

RationalFunction& RFMatrix::at(std::size_t i, std::size_t j) {
    return e_[i * n_ + j];
}

const RationalFunction& RFMatrix::at(std::size_t i, std::size_t j) const {
    return e_[i * n_ + j];
}

RFMatrix RFMatrix::operator+(const RFMatrix& rhs) const {
    if (n_ != rhs.n_) {
        throw std::invalid_argument("matrix dimensions do not match");
    }
    RFMatrix r(n_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + rhs.e_[i];
    return r;
}

RFMatrix RFMatrix::operator-(const RFMatrix& rhs) const {
    if (n_ != rhs.n_) {
        throw std::invalid_argument("matrix dimensions do not match");
    }
    RFMatrix r(n_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - rhs.e_[i];
    return r;
}

RFMatrix RFMatrix::operator*(const RFMatrix& rhs) const {
    if (n_ != rhs.n_) {
        throw std::invalid_argument("matrix dimensions do not match");
    }
    RFMatrix r(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t k = 0; k < n_; ++k) {
            const RationalFunction& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < n_; ++j) {
                if (rhs.at(k, j).is_zero()) continue;
                r.at(i, j) = r.at(i, j) + aik * rhs.at(k, j);
            }
        }
    }
    return r;
}

RFMatrix RFMatrix::scaled(const RationalFunction& f) const {
    RFMatrix r(n_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * f;
    return r;
}

std::vector<RationalFunction> RFMatrix::apply(
    const std::vector<RationalFunction>& v) const {
    if (v.size() != n_) {
        throw std::invalid_argument("vector length does not match matrix size");
    }
    std::vector<RationalFunction> r(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            if (at(i, j).is_zero() || v[j].is_zero()) continue;
            r[i] = r[i] + at(i, j) * v[j];
        }
    }
    return r;
}

RationalFunction RFMatrix::trace() const {
    RationalFunction t;
    for (std::size_t i = 0; i < n_; ++i) t = t + at(i, i);
    return t;
}

RationalFunction RFMatrix::det() const {
    if (n_ <= 3) {
        std::vector<std::vector<RationalFunction>> w(
            n_, std::vector<RationalFunction>(n_));
        for (std::size_t i = 0; i < n_; ++i) {
            for (std::size_t j = 0; j < n_; ++j) w[i][j] = at(i, j);
        }
        return det_small(w);
    }
    // Clear to a single polynomial matrix A with det(this) = det(A) / D^n.
    Polynomial common = Polynomial::constant(Rat(1));
    for (const RationalFunction& f : e_) {
        const Polynomial g = Polynomial::gcd(common, f.den());
        common = (common * f.den()).divrem(g).first;
    }
    std::vector<std::vector<Polynomial>> a(n_, std::vector<Polynomial>(n_));
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            const RationalFunction& f = at(i, j);
            a[i][j] = f.num() * common.divrem(f.den()).first;
        }
    }
    const Polynomial det_a = poly_det_bareiss(std::move(a));
    return RationalFunction(det_a, common.pow(static_cast<unsigned>(n_)));
}

RFMatrix RFMatrix::inverse() const {
    const RationalFunction d = det();
    if (d.is_zero()) {
        throw std::domain_error("matrix of rational functions is singular");
    }
    RFMatrix r(n_);
    if (n_ == 1) {
        r.at(0, 0) = d.inverse();
        return r;
    }
    if (n_ <= 3) {
        // Adjugate over rational functions: transpose of the cofactors.
        for (std::size_t i = 0; i < n_; ++i) {
            for (std::size_t j = 0; j < n_; ++j) {
                std::vector<std::vector<RationalFunction>> minor(n_ - 1);
                std::size_t mi = 0;
                for (std::size_t p = 0; p < n_; ++p) {
                    if (p == i) continue;
                    for (std::size_t q = 0; q < n_; ++q) {
                        if (q == j) continue;
                        minor[mi].push_back(at(p, q));
                    }
                    ++mi;
                }
                RationalFunction c = det_small(minor) / d;
                if ((i + j) % 2 == 1) c = -c;
                r.at(j, i) = c;
            }
        }
        return r;
    }
    // Larger sizes: clear denominators once and take cofactors of the
    // polynomial matrix, so all eliminations stay fraction-free.
    Polynomial common = Polynomial::constant(Rat(1));
    for (const RationalFunction& f : e_) {
        const Polynomial g = Polynomial::gcd(common, f.den());
        common = (common * f.den()).divrem(g).first;
    }
    std::vector<std::vector<Polynomial>> a(n_, std::vector<Polynomial>(n_));
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            const RationalFunction& f = at(i, j);
            a[i][j] = f.num() * common.divrem(f.den()).first;
        }
    }
    const Polynomial det_a = poly_det_bareiss(a);
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            std::vector<std::vector<Polynomial>> minor(n_ - 1);
            std::size_t mi = 0;
            for (std::size_t p = 0; p < n_; ++p) {
                if (p == i) continue;
                for (std::size_t q = 0; q < n_; ++q) {
                    if (q == j) continue;
                    minor[mi].push_back(a[p][q]);
                }
                ++mi;
            }
            Polynomial c = poly_det_bareiss(std::move(minor)) * common;
            if ((i + j) % 2 == 1) c = -c;
            r.at(j, i) = RationalFunction(std::move(c), det_a);
        }
    }
    return r;
}

std::string RFMatrix::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < n_; ++i) {
        if (i > 0) out += ", ";
        out += "[";
        for (std::size_t j = 0; j < n_; ++j) {
            if (j > 0) out += ", ";
            out += at(i, j).to_string();
        }
        out += "]";
    }
    out += "]";
    return out;
}

std::ostream& operator<<(std::ostream& os, const RFMatrix& m) {
    return os << m.to_string();
}

}  // namespace cfzeta
