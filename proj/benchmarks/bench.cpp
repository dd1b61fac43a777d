/// @file bench.cpp
/// @brief Microbenchmarks for the hot paths: triangle generation, the two
///        total-positivity routes, Hankel minors, Sturm counts and the
///        numeric root solver.

#include <benchmark/benchmark.h>

#include <stirling/aberth.hpp>
#include <stirling/hankel.hpp>
#include <stirling/matrix.hpp>
#include <stirling/rootcert.hpp>
#include <stirling/sturm.hpp>
#include <stirling/tp.hpp>
#include <stirling/triangle.hpp>

#include <vector>

using namespace stirling;

static void BM_TriangleCycle(benchmark::State& state) {
    const int r = static_cast<int>(state.range(0));
    for (auto _ : state) {
        const Triangle t = stirling_cycle_r(r, 60);
        benchmark::DoNotOptimize(t.rows.data());
    }
}
BENCHMARK(BM_TriangleCycle)->Arg(2)->Arg(4)->Arg(6);

static void BM_NevilleTP(benchmark::State& state) {
    const int size = static_cast<int>(state.range(0));
    const Triangle t = stirling_cycle_r(3, size - 1);
    const IntMat m = triangle_matrix(t, size);
    for (auto _ : state) {
        const TPReport rep = neville_tp_test(m);
        benchmark::DoNotOptimize(rep.verdict);
    }
}
BENCHMARK(BM_NevilleTP)->Arg(10)->Arg(20);

static void BM_ExhaustiveMinors(benchmark::State& state) {
    const int size = static_cast<int>(state.range(0));
    const Triangle t = stirling_cycle_r(3, size - 1);
    const IntMat m = triangle_matrix(t, size);
    for (auto _ : state) {
        const TPReport rep = all_minors_nonneg(m, size);
        benchmark::DoNotOptimize(rep.minors_evaluated);
    }
}
BENCHMARK(BM_ExhaustiveMinors)->Arg(6)->Arg(8);

static void BM_HankelCoeffwise(benchmark::State& state) {
    const int size = static_cast<int>(state.range(0));
    const Triangle t = stirling_cycle_r(3, 2 * size - 2);
    std::vector<IntPoly> polys;
    for (int n = 0; n < 2 * size - 1; ++n) polys.push_back(row_poly(t, n));
    for (auto _ : state) {
        const HankelReport rep = coeffwise_hankel_tp(polys, size, size);
        benchmark::DoNotOptimize(rep.minors_evaluated);
    }
}
BENCHMARK(BM_HankelCoeffwise)->Arg(3)->Arg(5);

static void BM_SturmCount(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Triangle t = stirling_cycle_r(2, n);
    const IntPoly q = row_poly(t, n).shifted_down();
    for (auto _ : state) {
        const long real = count_real_roots(q);
        benchmark::DoNotOptimize(real);
    }
}
BENCHMARK(BM_SturmCount)->Arg(10)->Arg(20);

static void BM_AberthRoots(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Triangle t = stirling_cycle_r(3, n);
    const IntPoly p = row_poly(t, n);
    AberthOptions opt{};
    for (auto _ : state) {
        const NumericRoots nr = numeric_roots(p, opt);
        benchmark::DoNotOptimize(nr.roots.size());
    }
}
BENCHMARK(BM_AberthRoots)->Arg(15)->Arg(30);

BENCHMARK_MAIN();
