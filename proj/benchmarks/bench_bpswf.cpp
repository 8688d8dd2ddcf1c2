#include "bpswf/bouwkamp.hpp"
#include "bpswf/pswf.hpp"
#include "bpswf/quadrature.hpp"
#include "bpswf/verification.hpp"

#include <benchmark/benchmark.h>

using namespace bpswf;

static void BM_SolveModes(benchmark::State &state) {
    const int N = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(solve_modes(N, 0.0, 10.0));
}
BENCHMARK(BM_SolveModes)->Arg(4)->Arg(12)->Arg(24);

static void BM_GaussJacobi(benchmark::State &state) {
    const JacobiParams p(1.0, 0.5);
    for (auto _ : state)
        benchmark::DoNotOptimize(gauss_jacobi(static_cast<int>(state.range(0)), p));
}
BENCHMARK(BM_GaussJacobi)->Arg(16)->Arg(64);

static void BM_VectorEval(benchmark::State &state) {
    const VectorPswf v(ModeIndex{0.0, 10.0, 3, 2, 4});
    const Vec3 x{0.3, -0.2, 0.5};
    for (auto _ : state)
        benchmark::DoNotOptimize(vector_eval(v, x));
}
BENCHMARK(BM_VectorEval);

static void BM_EstimateLambda(benchmark::State &state) {
    const int m = static_cast<int>(state.range(0));
    const VectorPswf v(ModeIndex{0.0, 2.0, 1, 0, 2});
    const auto rule = ball_rule(0.0, m, m, 2 * m);
    const auto pts = ratio_sample_points(v, 20);
    for (auto _ : state)
        benchmark::DoNotOptimize(estimate_lambda(v, rule, pts));
}
BENCHMARK(BM_EstimateLambda)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_MuDoubleTransform(benchmark::State &state) {
    const int m = static_cast<int>(state.range(0));
    const VectorPswf v(ModeIndex{0.0, 2.0, 1, 0, 2});
    const auto rule = ball_rule(0.0, m, m, 2 * m);
    const auto pts = ratio_sample_points(v, 20);
    for (auto _ : state)
        benchmark::DoNotOptimize(mu_via_double_transform(v, rule, pts));
}
BENCHMARK(BM_MuDoubleTransform)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
