// Microbenchmarks comparing the OpenMP kernels against their serial
// reference implementations, plus the two associated-prime routes.
//
//   ./bench_kernels                      # all benchmarks
//   ./bench_kernels --benchmark_filter=Hilbert

#include <benchmark/benchmark.h>

#include "assprime/ass_engine.hpp"
#include "assprime/corpus.hpp"
#include "assprime/hilbert.hpp"
#include "assprime/monomial_ideal.hpp"

namespace {

using namespace assprime;

// A mid-sized fixed instance: the square of a seeded 4-variable ideal,
// large enough that the kernels dominate the measurement.
MonomialIdeal bench_ideal() {
    CorpusGenerator gen(2024, CorpusParams{4, 4, 5});
    return power(gen.next_ideal(), 2);
}

void BM_HilbertParallel(benchmark::State& state) {
    MonomialIdeal I = bench_ideal();
    MonomialIdeal unit = MonomialIdeal::unit(I.ring());
    int d = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(hilbert_count(unit, I, d));
}
BENCHMARK(BM_HilbertParallel)->Arg(12)->Arg(16)->Arg(20);

void BM_HilbertSerial(benchmark::State& state) {
    MonomialIdeal I = bench_ideal();
    MonomialIdeal unit = MonomialIdeal::unit(I.ring());
    int d = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(hilbert_count_serial(unit, I, d));
}
BENCHMARK(BM_HilbertSerial)->Arg(12)->Arg(16)->Arg(20);

void BM_AssWitnessParallel(benchmark::State& state) {
    MonomialIdeal I = bench_ideal();
    MonomialIdeal unit = MonomialIdeal::unit(I.ring());
    for (auto _ : state)
        benchmark::DoNotOptimize(ass_module(unit, I));
}
BENCHMARK(BM_AssWitnessParallel);

void BM_AssWitnessSerial(benchmark::State& state) {
    MonomialIdeal I = bench_ideal();
    MonomialIdeal unit = MonomialIdeal::unit(I.ring());
    for (auto _ : state)
        benchmark::DoNotOptimize(ass_module_serial(unit, I));
}
BENCHMARK(BM_AssWitnessSerial);

void BM_AssByDecomposition(benchmark::State& state) {
    MonomialIdeal I = bench_ideal();
    for (auto _ : state)
        benchmark::DoNotOptimize(ass_ring_quotient(I));
}
BENCHMARK(BM_AssByDecomposition);

void BM_AssByWitness(benchmark::State& state) {
    MonomialIdeal I = bench_ideal();
    MonomialIdeal unit = MonomialIdeal::unit(I.ring());
    for (auto _ : state)
        benchmark::DoNotOptimize(ass_module(unit, I));
}
BENCHMARK(BM_AssByWitness);

} // namespace

BENCHMARK_MAIN();
