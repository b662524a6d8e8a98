#include <benchmark/benchmark.h>

#include "scatter/green.hpp"
#include "scatter/potential.hpp"
#include "scatter/radon.hpp"
#include "scatter/solver.hpp"
#include "scatter/spectral.hpp"

using namespace scatter;

static void BM_ConvolveGreen(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    BallDomain d = make_grid(1.0, n);
    Potential q = bump_potential(d, 0.1, 0.8);
    ComplexField f(d);
    for (std::size_t m = 0; m < q.values.size(); ++m) f.values[m] = q.values[m];
    KernelParams p(5.0, Vec3{0, 0, 1});
    for (auto _ : state) benchmark::DoNotOptimize(convolve_green(f, p));
}
BENCHMARK(BM_ConvolveGreen)->Arg(17)->Arg(33)->Arg(49);

static void BM_SolveEps(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    BallDomain d = make_grid(1.0, n);
    Potential q = bump_potential(d, 0.1, 0.8);
    for (auto _ : state)
        benchmark::DoNotOptimize(solve_eps(q, Vec3{0, 0, 1}, 5.0));
}
BENCHMARK(BM_SolveEps)->Arg(25)->Arg(33);

static void BM_ForwardFt(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    BallDomain d = make_grid(1.0, n);
    Potential q = bump_potential(d, 0.1, 0.8);
    for (auto _ : state) benchmark::DoNotOptimize(forward_ft(q, 2));
}
BENCHMARK(BM_ForwardFt)->Arg(33)->Arg(65);

static void BM_RadonProfile(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    BallDomain d = make_grid(1.0, n);
    Potential q = bump_potential(d, 0.1, 0.8);
    const Vec3 beta = Vec3{0.3, -0.5, 1.0}.normalized();
    for (auto _ : state)
        benchmark::DoNotOptimize(radon_transform(q, beta, 2 * n));
}
BENCHMARK(BM_RadonProfile)->Arg(33)->Arg(65);

BENCHMARK_MAIN();
