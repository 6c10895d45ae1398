#include "cfzeta/int_matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace cfzeta {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) {
        throw std::invalid_argument("matrix product dimension mismatch");
    }
    IntMatrix r(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& aik = at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                r.at(i, j) += aik * rhs.at(k, j);
            }
        }
    }
    return r;
}

IntMatrix IntMatrix::operator+(const IntMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
        throw std::invalid_argument("matrix sum dimension mismatch");
    }
    IntMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + rhs.a_[i];
    return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
        throw std::invalid_argument("matrix difference dimension mismatch");
    }
    IntMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - rhs.a_[i];
    return r;
}

IntMatrix IntMatrix::scaled(const Int& c) const {
    IntMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * c;
    return r;
}

IntMatrix IntMatrix::pow(unsigned long e) const {
    if (rows_ != cols_) {
        throw std::invalid_argument("matrix power requires a square matrix");
    }
    IntMatrix result = identity(rows_);
    IntMatrix base = *this;
    while (e > 0) {
        if (e & 1ul) result = result * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

Int IntMatrix::trace() const {
    if (rows_ != cols_) {
        throw std::invalid_argument("trace requires a square matrix");
    }
    Int t = 0;
    for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

Int IntMatrix::det() const {
    if (rows_ != cols_) {
        throw std::invalid_argument("determinant requires a square matrix");
    }
    const std::size_t n = rows_;
    if (n == 0) return 1;
    if (n == 1) return at(0, 0);
    if (n == 2) return at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0);

    // Bareiss elimination: every division below is exact.
    IntMatrix w = *this;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (w.at(k, k) == 0) {
            std::size_t piv = k + 1;
            while (piv < n && w.at(piv, k) == 0) ++piv;
            if (piv == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(piv, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                w.at(i, j) = (w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j)) / prev;
            }
            w.at(i, k) = 0;
        }
        prev = w.at(k, k);
    }
    return sign > 0 ? w.at(n - 1, n - 1) : -w.at(n - 1, n - 1);
}

IntMatrix IntMatrix::minor_of(std::size_t i, std::size_t j) const {
    IntMatrix m(rows_ - 1, cols_ - 1);
    for (std::size_t r = 0, mr = 0; r < rows_; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0, mc = 0; c < cols_; ++c) {
            if (c == j) continue;
            m.at(mr, mc) = at(r, c);
            ++mc;
        }
        ++mr;
    }
    return m;
}

IntMatrix IntMatrix::adjugate() const {
    if (rows_ != cols_) {
        throw std::invalid_argument("adjugate requires a square matrix");
    }
    const std::size_t n = rows_;
    if (n == 1) {
        IntMatrix r(1, 1);
        r.at(0, 0) = 1;
        return r;
    }
    IntMatrix r(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Int c = minor_of(i, j).det();
            r.at(j, i) = ((i + j) % 2 == 0) ? c : -c;
        }
    }
    return r;
}

IntMatrix IntMatrix::unimodular_inverse() const {
    const Int dt = det();
    if (dt != 1 && dt != -1) {
        throw std::domain_error("integer matrix inverse requires det = +1 or -1");
    }
    IntMatrix adj = adjugate();
    return dt == 1 ? adj : adj.scaled(-1);
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& v) const {
    if (v.size() != cols_) {
        throw std::invalid_argument("matrix-vector dimension mismatch");
    }
    std::vector<Int> r(rows_, Int(0));
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            r[i] += at(i, j) * v[j];
        }
    }
    return r;
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << "[";
        for (std::size_t j = 0; j < cols_; ++j) {
            os << at(i, j) << (j + 1 < cols_ ? "," : "");
        }
        os << "]" << (i + 1 < rows_ ? "," : "");
    }
    os << "]";
    return os.str();
}

}  // namespace cfzeta
