#include <benchmark/benchmark.h>

#include "selberg/continuation.hpp"
#include "selberg/quadrature.hpp"

using namespace selberg;

static void BM_LogGamma(benchmark::State& state) {
    cplx z(3.7, 2.1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(log_gamma(z));
        z += cplx(1e-12, 0.0);
    }
}
BENCHMARK(BM_LogGamma);

static void BM_Hyp2f1Inverse(benchmark::State& state) {
    const cplx z = 1.0 / cplx(0.4, 0.133);
    for (auto _ : state) benchmark::DoNotOptimize(hyp2f1(2.0, 3.0, 6.0, z));
}
BENCHMARK(BM_Hyp2f1Inverse);

static void BM_SelbergQuadN2(benchmark::State& state) {
    QuadSettings qs;
    qs.target_rel = 1e-7;
    qs.max_level = static_cast<int>(state.range(0));
    qs.min_level = qs.max_level; // fixed-level cost
    const LaurentPoly one2 = LaurentPoly::one(2);
    GenericParams p(2);
    p.alpha = {cplx(0.3), cplx(0.1)};
    p.beta = {cplx(0.2), cplx(0.4)};
    p.set_gam(1, 2, cplx(0.15));
    for (auto _ : state) {
        QuadSettings q = qs;
        q.target_rel = 1e-30; // force the full level sweep
        try {
            benchmark::DoNotOptimize(selberg_quad({0, 2, 0}, one2, p, q));
        } catch (const unconverged&) {
        }
    }
}
BENCHMARK(BM_SelbergQuadN2)->Arg(4)->Arg(5)->Arg(6);

static void BM_Tamari(benchmark::State& state) {
    const int N = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_tamari({0, N, 0}));
}
BENCHMARK(BM_Tamari)->Arg(3)->Arg(5)->Arg(6);

static void BM_ContinueS2(benchmark::State& state) {
    const LaurentPoly one2 = LaurentPoly::one(2);
    GenericParams p(2);
    p.alpha = {cplx(-2.3), cplx(0.2)};
    p.beta = {cplx(0.3), cplx(0.4)};
    p.set_gam(1, 2, cplx(0.2));
    for (auto _ : state) benchmark::DoNotOptimize(continue_s2(p, one2));
}
BENCHMARK(BM_ContinueS2);

BENCHMARK_MAIN();
