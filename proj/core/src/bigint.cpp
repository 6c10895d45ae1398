#include "cfzeta/bigint.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace cfzeta {

Int floor_div(const Int& a, const Int& b) {
    if (b == 0) {
        throw std::invalid_argument("floor_div: division by zero");
    }
    Int q;
    mpz_fdiv_q(q.backend().data(), a.backend().data(), b.backend().data());
    return q;
}

Int isqrt(const Int& n) {
    if (n < 0) {
        throw std::invalid_argument("isqrt: negative argument");
    }
    Int r;
    mpz_sqrt(r.backend().data(), n.backend().data());
    return r;
}

bool is_perfect_square(const Int& n) {
    if (n < 0) {
        return false;
    }
    return mpz_perfect_square_p(n.backend().data()) != 0;
}

namespace {

bool is_probable_prime(const Int& n) {
    return mpz_probab_prime_p(n.backend().data(), 32) != 0;
}

// Pollard rho (Brent variant) for a composite odd n with no small factors.
Int pollard_rho(const Int& n) {
    if (n % 2 == 0) {
        return 2;
    }
    std::uint64_t state = 0x9e3779b97f4a7c15ULL;
    for (;;) {
        Int c = Int(splitmix64(state) % 0xffffULL) + 1;
        Int x = Int(splitmix64(state) % 0xffffULL) + 2;
        Int y = x;
        Int d = 1;
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            d = gcd(abs(x - y), n);
        }
        if (d != n) {
            return d;
        }
    }
}

void factor_into(const Int& n, std::vector<Int>& primes) {
    if (n == 1) {
        return;
    }
    if (is_probable_prime(n)) {
        primes.push_back(n);
        return;
    }
    Int d = pollard_rho(n);
    factor_into(d, primes);
    factor_into(n / d, primes);
}

}  // namespace

std::pair<Int, Int> square_part(const Int& n) {
    if (n <= 0) {
        throw std::invalid_argument("square_part: argument must be positive");
    }
    static std::map<Int, std::pair<Int, Int>> cache;
    static std::mutex cache_mutex;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(n);
        if (it != cache.end()) {
            return it->second;
        }
    }

    Int rest = n;
    Int d0 = 1;
    Int s = 1;
    // Strip small primes first; Pollard rho handles whatever survives.
    for (unsigned long p = 2; p < 100000 && rest > 1; ++p) {
        if (mpz_fdiv_ui(rest.backend().data(), p) != 0) {
            continue;
        }
        int e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        for (int i = 0; i < e / 2; ++i) {
            s *= p;
        }
        if (e % 2 == 1) {
            d0 *= p;
        }
    }
    if (rest > 1) {
        if (is_perfect_square(rest)) {
            s *= isqrt(rest);
        } else {
            std::vector<Int> primes;
            factor_into(rest, primes);
            std::map<Int, int> exps;
            for (const Int& p : primes) {
                ++exps[p];
            }
            for (const auto& [p, e] : exps) {
                for (int i = 0; i < e / 2; ++i) {
                    s *= p;
                }
                if (e % 2 == 1) {
                    d0 *= p;
                }
            }
        }
    }

    std::pair<Int, Int> result{d0, s};
    std::lock_guard<std::mutex> lock(cache_mutex);
    cache.emplace(n, result);
    return result;
}

std::string to_string(const Int& v) {
    return v.str();
}

std::string to_string(const Rat& v) {
    return v.str();
}

std::uint64_t hash_int(const Int& v) {
    // Fold the magnitude into 64 bits, then mix in the sign.
    std::uint64_t h = mpz_fdiv_ui(v.backend().data(), 0xffffffffffffffc5ULL);
    if (v < 0) {
        h = ~h;
    }
    std::uint64_t state = h ^ 0x2545f4914f6cdd1dULL;
    return splitmix64(state);
}

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace cfzeta
