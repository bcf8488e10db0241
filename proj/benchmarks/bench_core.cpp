#include <benchmark/benchmark.h>

#include "arr/catalog.hpp"
#include "arr/flats.hpp"
#include "arr/multinet.hpp"
#include "arr/os_quadratic.hpp"
#include "arr/resonance.hpp"

using namespace arr;

static void BM_FlatTable(benchmark::State& state, const char* spec) {
    const Arrangement a = build(parse_family_spec(spec));
    for (auto _ : state) {
        FlatTable t = compute_flat_table(a);
        benchmark::DoNotOptimize(t.size());
    }
}
BENCHMARK_CAPTURE(BM_FlatTable, monomial_3_3, "monomial:3:3");
BENCHMARK_CAPTURE(BM_FlatTable, full_monomial_4_3, "full-monomial:4:3");
BENCHMARK_CAPTURE(BM_FlatTable, g32, "G32")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_FlatTable, monomial_5_5, "monomial:5:5")->Unit(benchmark::kMillisecond);

static void BM_Beta(benchmark::State& state, const char* spec, int64_t p) {
    const Arrangement a = build(parse_family_spec(spec));
    const FlatTable t = compute_flat_table(a);
    for (auto _ : state) {
        benchmark::DoNotOptimize(beta_p(a, t, p).value);
    }
}
BENCHMARK_CAPTURE(BM_Beta, g31_p2, "G31", 2);
BENCHMARK_CAPTURE(BM_Beta, monomial_6_3_p3, "monomial:6:3", 3);

static void BM_Aomoto(benchmark::State& state, const char* spec, int64_t p) {
    const Arrangement a = build(parse_family_spec(spec));
    const FlatTable t = compute_flat_table(a);
    for (auto _ : state) {
        benchmark::DoNotOptimize(aomoto_h1(a, t, p));
    }
}
BENCHMARK_CAPTURE(BM_Aomoto, g31_p2, "G31", 2);

static void BM_RankCyc(benchmark::State& state, const char* spec) {
    const Arrangement a = build(parse_family_spec(spec));
    const CycMatrix m = a.normal_matrix();
    for (auto _ : state) {
        benchmark::DoNotOptimize(rank_cyc(m));
    }
}
BENCHMARK_CAPTURE(BM_RankCyc, g33, "G33");

static void BM_NetSearch(benchmark::State& state) {
    const Arrangement a = build(parse_family_spec("hessian"));
    const FlatTable t = compute_flat_table(a);
    for (auto _ : state) {
        benchmark::DoNotOptimize(search_nets(a, t, 4).size());
    }
}
BENCHMARK(BM_NetSearch)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
