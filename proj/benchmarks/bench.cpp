#include <benchmark/benchmark.h>

#include "gdpoly/gd_table.hpp"
#include "gdpoly/genus.hpp"
#include "gdpoly/string_oracle.hpp"

namespace {

using namespace gdpoly;

void BM_gd_table(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        GDTable t;
        t.extend(n);
        benchmark::DoNotOptimize(t.R(n).term_count());
    }
}
BENCHMARK(BM_gd_table)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_antiderivative(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    GDTable t;
    const DiffPoly integrand = DiffPoly::u(1) * t.R(n);
    for (auto _ : state)
        benchmark::DoNotOptimize(antiderivative(integrand).term_count());
}
BENCHMARK(BM_antiderivative)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_solve_string(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    const int g = static_cast<int>(state.range(1));
    GDTable t;
    t.extend(2);
    for (auto _ : state) {
        StringSolution sol = solve_string(t, {2}, d, g);
        benchmark::DoNotOptimize(sol.u.term_count());
    }
}
BENCHMARK(BM_solve_string)->Args({6, 2})->Args({8, 3})->Unit(benchmark::kMillisecond);

void BM_a_sequence(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        ASequence seq(n);
        benchmark::DoNotOptimize(seq.a(n));
    }
}
BENCHMARK(BM_a_sequence)->Arg(200)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
