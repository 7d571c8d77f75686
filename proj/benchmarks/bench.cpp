#include <benchmark/benchmark.h>

#include "cftor/cf.hpp"
#include "cftor/families.hpp"
#include "cftor/hseq.hpp"
#include "cftor/igusa.hpp"
#include "cftor/partitions.hpp"
#include "cftor/symbolic.hpp"

using namespace cftor;

static void BM_cf_expand(benchmark::State& state) {
    Poly f = g_curve(Rational(2));
    for (auto _ : state) benchmark::DoNotOptimize(cf_expand(f, 32));
}
BENCHMARK(BM_cf_expand);

static void BM_h_suite(benchmark::State& state) {
    Poly f = flynn_curve(Rational(3));
    CFExpansion e = cf_expand(f, 32);
    for (auto _ : state) {
        ContinuantTable t = ContinuantTable::from_expansion(e);
        HSequence hs = h_sequence(e, t);
        benchmark::DoNotOptimize(h_property_check(e, hs));
    }
}
BENCHMARK(BM_h_suite);

static void BM_resultant(benchmark::State& state) {
    Poly f = flynn_curve(Rational(7));
    Poly df = derivative(f);
    for (auto _ : state) benchmark::DoNotOptimize(resultant(f, df));
}
BENCHMARK(BM_resultant);

static void BM_igusa_ABCD(benchmark::State& state) {
    Poly f = flynn_curve(Rational(1));
    benchmark::DoNotOptimize(igusa_ABCD(f)); // warm the invariant-formula cache
    for (auto _ : state) benchmark::DoNotOptimize(igusa_ABCD(f));
}
BENCHMARK(BM_igusa_ABCD);

static void BM_igusa_family(benchmark::State& state) {
    SexticFamily fam = flynn_family();
    for (auto _ : state) benchmark::DoNotOptimize(igusa_ABCD_family(fam));
}
BENCHMARK(BM_igusa_family);

static void BM_enumerate_partitions(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_partitions(2, 11));
}
BENCHMARK(BM_enumerate_partitions);

static void BM_eliminate_family(benchmark::State& state) {
    PartitionSpec spec{2, 11, 7, {2, 1, 1, 1, 1, 2}};
    for (auto _ : state) benchmark::DoNotOptimize(eliminate(build_system(spec)));
}
BENCHMARK(BM_eliminate_family);

static void BM_distinguish_desk(benchmark::State& state) {
    SexticFamily F = flynn_family(), H = h_family();
    auto trivial = flynn_trivial_factors();
    for (auto _ : state)
        benchmark::DoNotOptimize(distinguish_families(F, H, trivial));
}
BENCHMARK(BM_distinguish_desk);

BENCHMARK_MAIN();
