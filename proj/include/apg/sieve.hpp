#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace apg {

struct PrimeRange {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;  // inclusive
};

using PrimeConsumer = std::function<void(std::uint64_t)>;

inline constexpr std::uint64_t kSegmentSpan = std::uint64_t(1) << 22;
inline constexpr std::uint64_t kSpfLimit = 100'000'000;

// Calls consumer once per prime in [lo, hi], in increasing order.
void primes_in_range(PrimeRange range, const PrimeConsumer& consumer);
// Same contract; segments are sieved by OpenMP workers in batches and
// delivered in order from the calling thread.
void primes_in_range_parallel(PrimeRange range, const PrimeConsumer& consumer, int jobs);

std::vector<std::uint64_t> collect_primes(PrimeRange range, int jobs = 1);
std::uint64_t count_primes(PrimeRange range, int jobs = 1);

// spf[n] is the smallest prime factor of n; spf[1] = 1 and spf[0] = 0.
std::vector<std::uint32_t> spf_table(std::uint64_t limit);

}  // namespace apg
