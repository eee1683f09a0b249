#include <benchmark/benchmark.h>

#include <random>

#include "qsolv/algebra.hpp"
#include "qsolv/lattice.hpp"
#include "qsolv/oracle.hpp"
#include "qsolv/quantum.hpp"
#include "qsolv/strata.hpp"

using namespace qsolv;

static void BM_MultiplyPowers(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        // fresh engine each round so the letter cache is measured too
        Algebra alg(quantum_matrices(2));
        Element a = alg.multiply(alg.gen(3, n), alg.gen(0, n));
        benchmark::DoNotOptimize(a);
    }
}
BENCHMARK(BM_MultiplyPowers)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_Stratify(benchmark::State& state) {
    Presentation p = quantum_matrices(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(stratify(p));
}
BENCHMARK(BM_Stratify)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_FiberBlocks(benchmark::State& state) {
    const int l = static_cast<int>(state.range(0));
    Presentation p = quantum_plane();
    std::vector<Cyclotomic> chi{Cyclotomic::one(l), Cyclotomic::zero(l)};
    for (auto _ : state) {
        auto A = fiber_algebra(p, l, chi);
        auto J = radical(A);
        benchmark::DoNotOptimize(blocks(A, J));
    }
}
BENCHMARK(BM_FiberBlocks)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_FullRankFiber(benchmark::State& state) {
    const int l = 3;
    auto st = build_stratum(quantum_matrices(2), {0, 1, 2, 3});
    std::vector<Cyclotomic> y(4, Cyclotomic::one(l));
    for (auto _ : state) benchmark::DoNotOptimize(stratum_fiber(st, l, y));
}
BENCHMARK(BM_FullRankFiber)->Unit(benchmark::kMillisecond);

static void BM_Smith(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<int> d(-50, 50);
    IntMatrix a(static_cast<size_t>(n), std::vector<Integer>(static_cast<size_t>(n)));
    for (auto& row : a)
        for (auto& x : row) x = d(rng);
    for (auto _ : state) benchmark::DoNotOptimize(smith(a));
}
BENCHMARK(BM_Smith)->Arg(6)->Arg(12)->Arg(24);

static void BM_CenterChart(benchmark::State& state) {
    auto st = build_stratum(quantum_matrices(2), {0, 1, 2, 3});
    for (auto _ : state) benchmark::DoNotOptimize(center_chart(st, quantum_matrices(2), 3));
}
BENCHMARK(BM_CenterChart)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
