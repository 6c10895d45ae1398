#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cfzeta/int_matrix.hpp"
#include "cfzeta/rational_function.hpp"

namespace cfzeta {

/**
 * Dense square matrix over exact rational functions. Small dimensions
 * only (the library uses sizes up to about 5), so determinants and
 * inverses favor exactness over asymptotics: cofactor expansion for
 * dimension <= 3, and fraction-free elimination on a cleared polynomial
 * matrix above that.
 */
class RFMatrix {
public:
    explicit RFMatrix(std::size_t n);

    static RFMatrix identity(std::size_t n);
    /// Entrywise lift of an integer matrix (which must be square).
    static RFMatrix lift(const IntMatrix& m);

    std::size_t size() const { return n_; }
    RationalFunction& at(std::size_t i, std::size_t j);
    const RationalFunction& at(std::size_t i, std::size_t j) const;

    RFMatrix operator+(const RFMatrix& rhs) const;
    RFMatrix operator-(const RFMatrix& rhs) const;
    RFMatrix operator*(const RFMatrix& rhs) const;
    RFMatrix scaled(const RationalFunction& f) const;

    std::vector<RationalFunction> apply(
        const std::vector<RationalFunction>& v) const;

    RationalFunction trace() const;
    RationalFunction det() const;
    /// Exact inverse; throws domain_error when the determinant is zero.
    RFMatrix inverse() const;

    bool operator==(const RFMatrix& rhs) const {
        return n_ == rhs.n_ && e_ == rhs.e_;
    }
    bool operator!=(const RFMatrix& rhs) const { return !(*this == rhs); }

    std::string to_string() const;

private:
    std::size_t n_;
    std::vector<RationalFunction> e_;
};

std::ostream& operator<<(std::ostream& os, const RFMatrix& m);

}  // namespace cfzeta
