#pragma once

// Arbitrary-precision integer and rational types plus the handful of exact
// integer primitives the rest of the library is built on: floor division,
// integer square root, perfect-square testing, and square-part extraction.

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>
#include <utility>

namespace cfzeta {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

// Floor division a/b (rounds toward -infinity). b must be nonzero.
Int floor_div(const Int& a, const Int& b);

// Largest integer s with s*s <= n. n must be non-negative.
Int isqrt(const Int& n);

bool is_perfect_square(const Int& n);

// Decompose n > 0 as n = d0 * s^2 with d0 squarefree; returns (d0, s).
// Factors n by trial division and Pollard rho; results are memoized, so
// repeated queries for the same radicand (the common case along a Gauss
// orbit) are cheap.
std::pair<Int, Int> square_part(const Int& n);

// Decimal rendering helpers used by reports and error messages.
std::string to_string(const Int& v);
std::string to_string(const Rat& v);

// 64-bit mixing of an Int, for hashing canonical forms.
std::uint64_t hash_int(const Int& v);

// splitmix64 step; used to derive independent per-sample RNG seeds.
std::uint64_t splitmix64(std::uint64_t& state);

}  // namespace cfzeta
