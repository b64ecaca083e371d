// Serial reference kernels against their OpenMP counterparts.
#include <benchmark/benchmark.h>

#include "apg/majorant.hpp"
#include "apg/sieve.hpp"
#include "apg/thm1.hpp"
#include "apg/thm23.hpp"

using namespace apg;

namespace {

const PrimeRange kRange{500'000'000, 500'000'000 + 64 * kSegmentSpan};

void BM_sieve_serial(benchmark::State& st) {
    for (auto _ : st) {
        std::uint64_t n = 0;
        primes_in_range(kRange, [&](std::uint64_t) { ++n; });
        benchmark::DoNotOptimize(n);
    }
}

void BM_sieve_parallel(benchmark::State& st) {
    for (auto _ : st) {
        std::uint64_t n = 0;
        primes_in_range_parallel(kRange, [&](std::uint64_t) { ++n; }, int(st.range(0)));
        benchmark::DoNotOptimize(n);
    }
}

const std::vector<std::uint32_t>& spf() {
    static auto t = spf_table(1'000'000);
    return t;
}

void BM_thm1_scan_serial(benchmark::State& st) {
    thm1::ParamSet p;
    for (auto _ : st) benchmark::DoNotOptimize(thm1::failing_q_serial(p, 3, 1'000'000, false, spf()));
}

void BM_thm1_scan_parallel(benchmark::State& st) {
    thm1::ParamSet p;
    for (auto _ : st)
        benchmark::DoNotOptimize(thm1::failing_q(p, 3, 1'000'000, false, spf(), int(st.range(0))));
}

void BM_thm2_range_serial(benchmark::State& st) {
    for (auto _ : st)
        benchmark::DoNotOptimize(thm23::thm2_range_failures_serial(100, 1'000'000, 37, 100, false, spf()));
}

void BM_thm2_range_parallel(benchmark::State& st) {
    for (auto _ : st)
        benchmark::DoNotOptimize(
            thm23::thm2_range_failures(100, 1'000'000, 37, 100, false, spf(), int(st.range(0))));
}

void BM_S_scan_serial(benchmark::State& st) {
    auto c = majorant::table2();
    for (auto _ : st) benchmark::DoNotOptimize(majorant::scan_S_serial(c, 100'000));
}

void BM_S_scan_parallel(benchmark::State& st) {
    auto c = majorant::table2();
    for (auto _ : st) benchmark::DoNotOptimize(majorant::scan_S(c, 100'000, int(st.range(0))));
}

void BM_majorant(benchmark::State& st) {
    auto c = majorant::table2();
    for (auto _ : st) benchmark::DoNotOptimize(majorant::verify_majorant(c, 1e6, 2'000'000, int(st.range(0))));
}

}  // namespace

BENCHMARK(BM_sieve_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_sieve_parallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_thm1_scan_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_thm1_scan_parallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_thm2_range_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_thm2_range_parallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_S_scan_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_S_scan_parallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_majorant)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
