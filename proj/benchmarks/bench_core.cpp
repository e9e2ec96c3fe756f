#include <benchmark/benchmark.h>

#include "eisq/classify.hpp"
#include "eisq/complex.hpp"
#include "eisq/enumerate.hpp"
#include "eisq/gallery.hpp"
#include "eisq/homology.hpp"
#include "eisq/independence.hpp"

static void BM_MaximalIndependentSets(benchmark::State& state) {
    eisq::Graph g = eisq::cycle_complement(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(eisq::maximal_independent_sets(g));
}
BENCHMARK(BM_MaximalIndependentSets)->Arg(8)->Arg(12);

static void BM_IndependenceComplexQ12(benchmark::State& state) {
    eisq::Graph g = eisq::q12();
    for (auto _ : state) benchmark::DoNotOptimize(eisq::independence_complex(g));
}
BENCHMARK(BM_IndependenceComplexQ12);

static void BM_BettiNumbersQ12(benchmark::State& state) {
    eisq::PrimeField field(static_cast<std::uint32_t>(state.range(0)));
    eisq::SimplicialComplex k = eisq::independence_complex(eisq::q12());
    for (auto _ : state) benchmark::DoNotOptimize(eisq::reduced_betti_numbers(k, field));
}
BENCHMARK(BM_BettiNumbersQ12)->Arg(2)->Arg(32003);

static void BM_GorensteinCheckQ12(benchmark::State& state) {
    eisq::PrimeField field(2);
    eisq::SimplicialComplex k = eisq::independence_complex(eisq::q12());
    for (auto _ : state) benchmark::DoNotOptimize(eisq::is_gorenstein_complex(k, field));
}
BENCHMARK(BM_GorensteinCheckQ12);

static void BM_CanonicalCertificate(benchmark::State& state) {
    eisq::Graph g = eisq::p10();
    for (auto _ : state) benchmark::DoNotOptimize(eisq::canonical_certificate(g));
}
BENCHMARK(BM_CanonicalCertificate);

static void BM_Enumerate(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(eisq::enumerate_graphs(n).size());
}
BENCHMARK(BM_Enumerate)->Arg(6)->Arg(7);

static void BM_MatchGallery(benchmark::State& state) {
    std::vector<int> rotate(12);
    for (int i = 0; i < 12; ++i) rotate[static_cast<std::size_t>(i)] = (i + 5) % 12;
    eisq::Graph g = eisq::relabel(eisq::p12(), rotate);
    for (auto _ : state) benchmark::DoNotOptimize(eisq::match_gallery(g));
}
BENCHMARK(BM_MatchGallery);

static void BM_ClassifyWithOracle(benchmark::State& state) {
    eisq::Graph g = eisq::q9();
    eisq::ClassificationOptions opts;
    opts.with_oracle = true;
    for (auto _ : state) benchmark::DoNotOptimize(eisq::classify(g, opts));
}
BENCHMARK(BM_ClassifyWithOracle);

BENCHMARK_MAIN();
