// Compares the serial reference scans against the OpenMP kernels on the
// instances the test suite leans on hardest. Run with --benchmark_filter=...
// to pick one; OMP_NUM_THREADS controls the parallel side.

#include <benchmark/benchmark.h>

#include "rssep/constructions.hpp"
#include "rssep/cover.hpp"
#include "rssep/oracles.hpp"

using namespace rssep;

namespace {

void bm_sep_scan(benchmark::State& state, ScanMode mode) {
    // d = 6 clears the 2-TA threshold, so every one of the ~750k coalition
    // pairs is enumerated; no early exit
    const auto f = Field::make(7, 1);
    const CodeParams code = make_code(f, PointMode::Full, 2);
    for (auto _ : state) {
        const SepScanResult res = exhaustive_sep_check(code, 2, {}, mode);
        benchmark::DoNotOptimize(res.all_separated);
    }
}

void bm_ta_scan(benchmark::State& state, ScanMode mode) {
    const auto f = Field::make(11, 1);
    const WitnessPair w = construct_q11_c2(f);
    const CodeParams code = witness_code(w);
    Coalition U, V;
    for (const auto& poly : w.U) U.members.push_back(encode_at(code, poly, w.points));
    for (const auto& poly : w.V) V.members.push_back(encode_at(code, poly, w.points));
    const PirateWord z = forge_pirate(U, V);
    for (auto _ : state) {
        const TaCheckResult res = ta_violation_check(U, z, code, {}, mode);
        benchmark::DoNotOptimize(res.violated);
    }
}

void bm_cover_sweep(benchmark::State& state, ScanMode mode) {
    for (auto _ : state) {
        const auto rows = cover_sweep(2000, /*primes_only=*/true, mode);
        benchmark::DoNotOptimize(rows.size());
    }
}

void bm_fp_scan(benchmark::State& state, ScanMode mode) {
    const auto f = Field::make(3, 1);
    const CodeParams code = make_code(f, PointMode::Full, 3);
    for (auto _ : state) {
        const FpScanResult res = exhaustive_fp_check(code, 2, {}, mode);
        benchmark::DoNotOptimize(res.all_frameproof);
    }
}

}  // namespace

BENCHMARK_CAPTURE(bm_sep_scan, serial, ScanMode::Serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bm_sep_scan, parallel, ScanMode::Parallel)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bm_ta_scan, serial, ScanMode::Serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bm_ta_scan, parallel, ScanMode::Parallel)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bm_fp_scan, serial, ScanMode::Serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bm_fp_scan, parallel, ScanMode::Parallel)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bm_cover_sweep, serial, ScanMode::Serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bm_cover_sweep, parallel, ScanMode::Parallel)
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
