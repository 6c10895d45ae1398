#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cfzeta/bigint.hpp"

namespace cfzeta {

/**
 * Dense square-or-rectangular matrix with arbitrary-precision integer
 * entries. Dimensions in this library stay tiny (at most 5x5), so the
 * implementation favors exactness and clarity: determinants use the
 * fraction-free Bareiss elimination, and inverses exist only for unimodular
 * matrices, where the adjugate divided by det = +-1 stays integral.
 */
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, Int(0)) {}

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    IntMatrix operator*(const IntMatrix& rhs) const;
    IntMatrix operator+(const IntMatrix& rhs) const;
    IntMatrix operator-(const IntMatrix& rhs) const;
    IntMatrix scaled(const Int& c) const;

    /// Non-negative integer power of a square matrix.
    IntMatrix pow(unsigned long e) const;

    Int trace() const;

    /// Exact determinant by Bareiss fraction-free elimination.
    Int det() const;

    /// Transposed cofactor matrix; satisfies A * adjugate(A) = det(A) * I.
    IntMatrix adjugate() const;

    /// Inverse of a matrix with det = +1 or -1 (the only integer-invertible
    /// case). Throws std::domain_error otherwise.
    IntMatrix unimodular_inverse() const;

    std::vector<Int> apply(const std::vector<Int>& v) const;

    bool operator==(const IntMatrix& rhs) const {
        return rows_ == rhs.rows_ && cols_ == rhs.cols_ && a_ == rhs.a_;
    }
    bool operator!=(const IntMatrix& rhs) const { return !(*this == rhs); }

    std::string to_string() const;

private:
    IntMatrix minor_of(std::size_t i, std::size_t j) const;

    std::size_t rows_, cols_;
    std::vector<Int> a_;
};

}  // namespace cfzeta
