#include <cmath>
#include <numeric>

#include "apg/checkers.hpp"
#include "apg/sieve.hpp"
#include "apg/tables.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace apg;
using namespace apg::checkers;

namespace {

const HParams kRow1{0.5, 1, 30};

double h_of(HParams hp, std::uint64_t q, double x) {
    return (hp.alpha * std::log(x) + hp.delta * std::log(double(q)) + hp.rho) *
           double(testing::naive_phi(q)) * std::sqrt(x);
}

// Brute force: per class, every gap between x0 and consecutive class primes must
// stay below h at its left end, and the last window must reach past x_end.
bool gaps_fit(HParams hp, std::uint64_t q, std::uint64_t x0, std::uint64_t x_end) {
    std::uint64_t end = x_end + std::uint64_t(std::floor(h_of(hp, q, double(x_end))));
    std::vector<std::uint64_t> primes;
    for (std::uint64_t n = x0; n <= end; ++n)
        if (testing::naive_is_prime(n)) primes.push_back(n);
    for (std::uint64_t a = 1; a < q; ++a) {
        if (std::gcd(a, q) != 1) continue;
        double left = double(x0);
        for (std::uint64_t p : primes) {
            if (p % q != a) continue;
            if (double(p) - left >= h_of(hp, q, left) - 1e-6) return false;
            left = double(p);
        }
        if (left + h_of(hp, q, left) - 1e-6 < double(x_end)) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("Check1 on published rows") {
    CHECK(check1(kRow1, 3, 23656, 193269).pass());
    CHECK(check1(kRow1, 24, 3167368, 3372409).pass());
}

TEST_CASE("CheckSqrt on published rows") {
    CHECK(check_sqrt(kRow1, 3, 81589, 332263).pass());
    CHECK(check_sqrt(kRow1, 8, 1169230, 1295310).pass());
    CheckOptions forced;
    forced.forced_count = 1'000'000'000;
    // no window collects 10^9 primes, so every class is left behind x_end
    auto r = check_sqrt(kRow1, 3, 81589, 10000000, forced);
    CHECK(r.failures.size() == 2);
}

TEST_CASE("Check1 matches a brute-force gap table") {
    CHECK(check1(kRow1, 3, 23656, 100000).pass() == gaps_fit(kRow1, 3, 23656, 100000));
    CHECK(gaps_fit(kRow1, 3, 23656, 100000));
    for (double rho : {-6.0, -5.95, -5.9, -5.5, -5.0}) {
        HParams hp{0.5, 1, rho};
        INFO("rho=" << rho);
        CHECK(check1(hp, 3, 23656, 100000).pass() == gaps_fit(hp, 3, 23656, 100000));
    }
}

TEST_CASE("a window narrower than the largest gap is caught") {
    // largest gap between primes = 1 mod 3 in [10^4, 10^5], scaled by 2 sqrt(p)
    double worst = 0;
    std::uint64_t prev = 0;
    for (std::uint64_t p : collect_primes({10000, 100000})) {
        if (p % 3 != 1) continue;
        if (prev) worst = std::max(worst, double(p - prev) / (2 * std::sqrt(double(prev))));
        prev = p;
    }
    HParams tight{0, 0, 0.9 * worst};
    auto r = check1(tight, 3, 10000, 100000);
    CHECK_FALSE(r.pass());
    bool class1 = false;
    for (const auto& f : r.failures) class1 |= f.residue == 1;
    CHECK(class1);
    CHECK(check1({0, 0, 1.01 * worst}, 3, 10000, 100000).failures.size() <= r.failures.size());
}

TEST_CASE("split scans equal one scan, and scans are deterministic") {
    std::uint64_t x0 = 1169230, x_end = 1295310, mid = 1200000;
    for (Mode mode : {Mode::single, Mode::sqrt}) {
        ResidueTracker whole(kRow1, 8, x0, mode), split(kRow1, 8, x0, mode);
        std::uint64_t end = whole.stream_end(x_end);
        primes_in_range({x0, end}, [&](std::uint64_t p) { whole.feed(p); });
        primes_in_range({x0, mid}, [&](std::uint64_t p) { split.feed(p); });
        primes_in_range({mid + 1, end}, [&](std::uint64_t p) { split.feed(p); });
        whole.finish(x_end);
        split.finish(x_end);
        CHECK(whole.deadlines() == split.deadlines());
        CHECK(whole.primes_scanned() == split.primes_scanned());
        CHECK(whole.failures().size() == split.failures().size());
    }
    auto a = check1(kRow1, 7, 1000000, 3000000), b = check1(kRow1, 7, 1000000, 3000000);
    CHECK(a.primes_scanned == b.primes_scanned);
    CHECK(a.failures.size() == b.failures.size());
    CheckOptions par;
    par.sieve_jobs = 3;
    CHECK(check1(kRow1, 7, 1000000, 3000000, par).primes_scanned == a.primes_scanned);
}

TEST_CASE("tracker bookkeeping") {
    ResidueTracker t(kRow1, 12, 100000, Mode::single);
    CHECK(t.residues() == std::vector<std::uint64_t>{1, 5, 7, 11});
    CHECK_THROWS(ResidueTracker(kRow1, 2, 100, Mode::single));
    CHECK_THROWS(check1(kRow1, 3, 500, 400));
}

TEST_CASE("exception blocks") {
    auto t5 = tables::load_exceptions(testing::data("table5.txt"));
    auto t6 = tables::load_exceptions(testing::data("table6.txt"));
    auto first = run_exception_block(t5[0], Mode::single, 2);
    CHECK(first.size() == 21);
    for (const auto& r : first) CHECK(r.pass());
    CHECK(run_exception_block(t5[2], Mode::single, 1).empty());
    auto single = run_exception_block(t6[1], Mode::sqrt, 1);
    REQUIRE(single.size() == 1);
    CHECK(single[0].q == 3);
    CHECK(single[0].x0 == 682534);
    CHECK(single[0].pass());
}
