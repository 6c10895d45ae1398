// Microbenchmarks for the hot paths: expansion, generating vectors, the
// trace identity verification, periodic point counting, and the random
// continued fraction sampler behind the Monte Carlo estimator.

#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include <cfzeta/gen_fun.hpp>
#include <cfzeta/levy.hpp>
#include <cfzeta/torus.hpp>
#include <cfzeta/zeta_identity.hpp>

namespace {

using namespace cfzeta;

CFExpansion mixed_expansion() {
    return CFExpansion({Int(2), Int(1)}, {Int(3), Int(1), Int(4)});
}

void bm_expand_surd(benchmark::State& state) {
    const QuadraticSurd x = QuadraticSurd::make(Int(3), Int(11), Int(19));
    for (auto _ : state) {
        benchmark::DoNotOptimize(CFExpansion::expand(x));
    }
}
BENCHMARK(bm_expand_surd);

void bm_convergents(benchmark::State& state) {
    const CFExpansion cf = mixed_expansion();
    const std::size_t count = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(convergents(cf, count));
    }
}
BENCHMARK(bm_convergents)->Arg(50)->Arg(200);

void bm_generating_vector(benchmark::State& state) {
    const CFExpansion cf = mixed_expansion();
    const std::size_t r = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(generating_vector(cf, r));
    }
}
BENCHMARK(bm_generating_vector)->Arg(1)->Arg(2)->Arg(3);

void bm_main_identity_check(benchmark::State& state) {
    const CFExpansion cf = mixed_expansion();
    const std::size_t order = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(main_identity_check(cf, order));
    }
}
BENCHMARK(bm_main_identity_check)->Arg(10)->Arg(20)->Arg(30);

void bm_fix_count(benchmark::State& state) {
    IntMatrix m(2, 2);
    m.at(0, 0) = 2; m.at(0, 1) = 1;
    m.at(1, 0) = 1; m.at(1, 1) = 1;
    const ToralAutomorphism cat(m);
    for (auto _ : state) {
        Int total(0);
        for (unsigned long n = 1; n <= 20; ++n) total += fix_count(cat, n);
        benchmark::DoNotOptimize(total);
    }
}
BENCHMARK(bm_fix_count);

void bm_fix_points_bruteforce(benchmark::State& state) {
    IntMatrix m(2, 2);
    m.at(0, 0) = 2; m.at(0, 1) = 1;
    m.at(1, 0) = 1; m.at(1, 1) = 1;
    const ToralAutomorphism cat(m);
    const unsigned long n = static_cast<unsigned long>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(fix_points_bruteforce(cat, n));
    }
}
BENCHMARK(bm_fix_points_bruteforce)->Arg(4)->Arg(8);

void bm_zeta_series(benchmark::State& state) {
    IntMatrix m(2, 2);
    m.at(0, 0) = 2; m.at(0, 1) = 1;
    m.at(1, 0) = 1; m.at(1, 1) = 1;
    const ToralAutomorphism cat(m);
    const std::size_t order = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(zeta_series(cat, order));
    }
}
BENCHMARK(bm_zeta_series)->Arg(15)->Arg(30);

void bm_levy_exact(benchmark::State& state) {
    const CFExpansion cf = mixed_expansion();
    for (auto _ : state) {
        benchmark::DoNotOptimize(levy_exact(cf, 128));
    }
}
BENCHMARK(bm_levy_exact);

void bm_levy_montecarlo_sample(benchmark::State& state) {
    std::uint64_t seed = 7;
    for (auto _ : state) {
        benchmark::DoNotOptimize(levy_ae_montecarlo(1, 200, seed++));
    }
}
BENCHMARK(bm_levy_montecarlo_sample);

}  // namespace

BENCHMARK_MAIN();
