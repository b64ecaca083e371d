#include "apg/checkers.hpp"

#include <chrono>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "apg/sieve.hpp"

namespace apg::checkers {

ResidueTracker::ResidueTracker(HParams hp, std::uint64_t q, std::uint64_t x0, Mode mode,
                               const CheckOptions& opt)
    : hp_(hp), fd_(factorize(q)), mode_(mode), opt_(opt) {
    if (q < 3) throw std::invalid_argument("q must be at least 3");
    if (q > 10000) throw std::invalid_argument("q above 10^4 is not supported");
    index_.assign(q, -1);
    for (std::uint64_t a = 1; a < q; ++a) {
        if (std::gcd(a, q) != 1) continue;
        index_[a] = std::int32_t(residues_.size());
        residues_.push_back(a);
    }
    deadline_.resize(residues_.size());
    count_.resize(residues_.size());
    for (std::uint32_t i = 0; i < residues_.size(); ++i) anchor(i, double(x0));
}

double ResidueTracker::h(double x) const {
    double a = mode_ == Mode::sqrt ? hp_.alpha + 1 : hp_.alpha;
    return (a * std::log(x) + hp_.delta * std::log(double(fd_.q)) + hp_.rho) * double(fd_.phi) *
           std::sqrt(x);
}

std::uint64_t ResidueTracker::stream_end(std::uint64_t x_end) const {
    return x_end + std::uint64_t(std::floor(h(double(x_end))));
}

void ResidueTracker::anchor(std::uint32_t idx, double at) {
    deadline_[idx] = at + h(at);
    if (mode_ == Mode::sqrt)
        count_[idx] = opt_.forced_count > 0 ? opt_.forced_count
                                            : std::int64_t(std::floor(std::sqrt(deadline_[idx]))) + 1;
}

void ResidueTracker::feed(std::uint64_t p) {
    std::int32_t idx = index_[p % fd_.q];
    if (idx < 0) return;
    ++scanned_;
    if (mode_ == Mode::sqrt && --count_[idx] != 0) return;
    if (deadline_[idx] - opt_.guard <= double(p)) failures_.push_back({residues_[idx], deadline_[idx]});
    anchor(std::uint32_t(idx), double(p));
}

void ResidueTracker::finish(std::uint64_t x_end) {
    for (std::size_t i = 0; i < residues_.size(); ++i)
        if (deadline_[i] - opt_.guard < double(x_end)) failures_.push_back({residues_[i], deadline_[i]});
}

namespace {

CheckReport run(HParams hp, std::uint64_t q, std::uint64_t x0, std::uint64_t x_end, Mode mode,
                const CheckOptions& opt) {
    if (x0 >= x_end) throw std::invalid_argument("x0 must be below x_end");
    auto start = std::chrono::steady_clock::now();
    ResidueTracker tracker(hp, q, x0, mode, opt);
    PrimeRange range{x0, tracker.stream_end(x_end)};
    auto feed = [&](std::uint64_t p) { tracker.feed(p); };
    if (opt.sieve_jobs > 1)
        primes_in_range_parallel(range, feed, opt.sieve_jobs);
    else
        primes_in_range(range, feed);
    tracker.finish(x_end);
    CheckReport rep{q, x0, x_end, mode, tracker.failures(), tracker.primes_scanned(), 0};
    rep.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

}  // namespace

CheckReport check1(HParams hp, std::uint64_t q, std::uint64_t x0, std::uint64_t x_end,
                   const CheckOptions& opt) {
    return run(hp, q, x0, x_end, Mode::single, opt);
}

CheckReport check_sqrt(HParams hp, std::uint64_t q, std::uint64_t x0, std::uint64_t x_end,
                       const CheckOptions& opt) {
    return run(hp, q, x0, x_end, Mode::sqrt, opt);
}

std::vector<CheckReport> run_exception_block(const ExceptionBlock& block, Mode mode, int jobs,
                                             const CheckOptions& opt) {
    for (const ExceptionRow& r : block.rows)
        if (r.q < 3 || r.q > 10000 || r.x0 >= r.x_end)
            throw std::invalid_argument("bad exception row for q=" + std::to_string(r.q));
    std::vector<CheckReport> out(block.rows.size());
    CheckOptions row_opt = opt;
    row_opt.sieve_jobs = 1;
#pragma omp parallel for num_threads(jobs < 1 ? 1 : jobs) schedule(dynamic, 1)
    for (std::int64_t i = 0; i < std::int64_t(block.rows.size()); ++i) {
        const ExceptionRow& r = block.rows[i];
        out[i] = run(block.hp, r.q, r.x0, r.x_end, mode, row_opt);
    }
    return out;
}

}  // namespace apg::checkers
