#include "apg/sieve.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace apg {

namespace {

std::uint64_t isqrt(std::uint64_t n) {
    auto r = std::uint64_t(std::sqrt(double(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

std::vector<std::uint32_t> small_odd_primes(std::uint64_t limit) {
    std::vector<char> composite(limit + 1, 0);
    std::vector<std::uint32_t> out;
    for (std::uint64_t i = 3; i <= limit; i += 2) {
        if (composite[i]) continue;
        out.push_back(std::uint32_t(i));
        for (std::uint64_t j = i * i; j <= limit; j += 2 * i) composite[j] = 1;
    }
    return out;
}

// Odd-only bitset sieve of [lo, hi]; appends primes (excluding 2) to out.
void sieve_segment(std::uint64_t lo, std::uint64_t hi, const std::vector<std::uint32_t>& base,
                   std::vector<std::uint64_t>& out) {
    if (lo % 2 == 0) ++lo;
    if (lo > hi) return;
    std::uint64_t count = (hi - lo) / 2 + 1;  // odd numbers lo, lo+2, ...
    std::vector<std::uint64_t> bits((count + 63) / 64, 0);
    for (std::uint32_t p32 : base) {
        std::uint64_t p = p32;
        if (p * p > hi) break;
        std::uint64_t start = std::max(p * p, (lo + p - 1) / p * p);
        if (start % 2 == 0) start += p;
        for (std::uint64_t j = start; j <= hi; j += 2 * p) {
            std::uint64_t k = (j - lo) / 2;
            bits[k >> 6] |= std::uint64_t(1) << (k & 63);
        }
    }
    for (std::uint64_t w = 0; w < bits.size(); ++w) {
        std::uint64_t free = ~bits[w];
        while (free) {
            std::uint64_t k = w * 64 + std::uint64_t(__builtin_ctzll(free));
            free &= free - 1;
            if (k >= count) break;
            std::uint64_t n = lo + 2 * k;
            if (n > 1) out.push_back(n);
        }
    }
}

struct Plan {
    std::vector<std::uint32_t> base;
    std::uint64_t first = 0;  // first odd candidate handled by segments
    bool emit_two = false;
};

Plan make_plan(PrimeRange r) {
    if (r.hi >= (std::uint64_t(1) << 63)) throw std::out_of_range("prime range exceeds 2^63");
    Plan plan;
    plan.base = small_odd_primes(isqrt(r.hi) + 1);
    plan.emit_two = r.lo <= 2 && r.hi >= 2;
    plan.first = std::max<std::uint64_t>(r.lo, 3);
    return plan;
}

}  // namespace

void primes_in_range(PrimeRange r, const PrimeConsumer& consumer) {
    if (r.lo > r.hi) return;
    Plan plan = make_plan(r);
    if (plan.emit_two) consumer(2);
    std::vector<std::uint64_t> buf;
    for (std::uint64_t lo = plan.first; lo <= r.hi; lo += kSegmentSpan) {
        std::uint64_t hi = std::min(r.hi, lo + kSegmentSpan - 1);
        buf.clear();
        sieve_segment(lo, hi, plan.base, buf);
        for (auto p : buf) consumer(p);
        if (hi == r.hi) break;
    }
}

void primes_in_range_parallel(PrimeRange r, const PrimeConsumer& consumer, int jobs) {
    if (jobs <= 1) return primes_in_range(r, consumer);
    if (r.lo > r.hi) return;
    Plan plan = make_plan(r);
    if (plan.emit_two) consumer(2);
    if (plan.first > r.hi) return;
    std::uint64_t nseg = (r.hi - plan.first) / kSegmentSpan + 1;
    std::vector<std::vector<std::uint64_t>> bufs(jobs);
    for (std::uint64_t s0 = 0; s0 < nseg; s0 += std::uint64_t(jobs)) {
        std::int64_t batch = std::int64_t(std::min<std::uint64_t>(jobs, nseg - s0));
#pragma omp parallel for num_threads(jobs) schedule(static, 1)
        for (std::int64_t i = 0; i < batch; ++i) {
            std::uint64_t lo = plan.first + (s0 + std::uint64_t(i)) * kSegmentSpan;
            std::uint64_t hi = std::min(r.hi, lo + kSegmentSpan - 1);
            bufs[i].clear();
            sieve_segment(lo, hi, plan.base, bufs[i]);
        }
        for (std::int64_t i = 0; i < batch; ++i)
            for (auto p : bufs[i]) consumer(p);
    }
}

std::vector<std::uint64_t> collect_primes(PrimeRange r, int jobs) {
    std::vector<std::uint64_t> out;
    primes_in_range_parallel(r, [&](std::uint64_t p) { out.push_back(p); }, jobs);
    return out;
}

std::uint64_t count_primes(PrimeRange r, int jobs) {
    std::uint64_t n = 0;
    primes_in_range_parallel(r, [&](std::uint64_t) { ++n; }, jobs);
    return n;
}

std::vector<std::uint32_t> spf_table(std::uint64_t limit) {
    if (limit > kSpfLimit) throw std::length_error("spf_table: limit exceeds 1e8 memory budget");
    std::vector<std::uint32_t> spf(limit + 1, 0);
    if (limit >= 1) spf[1] = 1;
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (spf[i]) continue;
        spf[i] = std::uint32_t(i);
        if (i * i > limit) continue;
        for (std::uint64_t j = i * i; j <= limit; j += i)
            if (!spf[j]) spf[j] = std::uint32_t(i);
    }
    return spf;
}

}  // namespace apg
