#pragma once

#include <cstdint>
#include <vector>

#include <cfzeta/bigint.hpp>
#include <cfzeta/cont_frac.hpp>
#include <cfzeta/rational_function.hpp>

namespace cfzeta::testing {

// Shorthand for building small polynomials in tests.
inline Polynomial poly(std::initializer_list<long> cs) {
    std::vector<Rat> v;
    for (long c : cs) v.emplace_back(c);
    return Polynomial(v);
}

inline RationalFunction rf(std::initializer_list<long> num, std::initializer_list<long> den) {
    return RationalFunction(poly(num), poly(den));
}

// The three named expansions used throughout the tests:
// golden = (sqrt(5)-1)/2, silver = sqrt(2)-1, half_rt2 = sqrt(2)/2.
inline CFExpansion golden_cf() { return CFExpansion({}, {1}); }
inline CFExpansion silver_cf() { return CFExpansion({}, {2}); }
inline CFExpansion half_rt2_cf() { return CFExpansion({1}, {2}); }

// Deterministic pseudo-random expansion with preperiod length <= max_pre,
// period length in 1..max_per and quotients in 1..max_quot.
inline CFExpansion random_cf(std::uint64_t& state, std::size_t max_pre,
                             std::size_t max_per, std::uint64_t max_quot) {
    const std::size_t k = static_cast<std::size_t>(splitmix64(state) % (max_pre + 1));
    const std::size_t l = 1 + static_cast<std::size_t>(splitmix64(state) % max_per);
    std::vector<Int> pre;
    std::vector<Int> per;
    for (std::size_t i = 0; i < k; ++i) pre.emplace_back(1 + splitmix64(state) % max_quot);
    for (std::size_t i = 0; i < l; ++i) per.emplace_back(1 + splitmix64(state) % max_quot);
    return CFExpansion(pre, per);
}

} // namespace cfzeta::testing
