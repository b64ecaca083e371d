#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "apg/arith.hpp"

namespace apg::checkers {

enum class Mode { single, sqrt };

struct HParams {
    double alpha = 0.5;
    double delta = 1;
    double rho = 30;
};

struct Failure {
    std::uint64_t residue = 0;
    double deadline = 0;
};

struct CheckReport {
    std::uint64_t q = 0;
    std::uint64_t x0 = 0;
    std::uint64_t x_end = 0;
    Mode mode = Mode::single;
    std::vector<Failure> failures;
    std::uint64_t primes_scanned = 0;
    double wall_time = 0;
    bool pass() const { return failures.empty(); }
};

struct CheckOptions {
    double guard = 1e-6;           // subtracted from every deadline before comparing
    std::int64_t forced_count = 0;  // sqrt mode: replaces floor(sqrt(M)) + 1 when > 0
    int sieve_jobs = 1;
};

// Per-residue state of one scan. Residues coprime to q are compacted to 0..phi-1.
class ResidueTracker {
public:
    ResidueTracker(HParams hp, std::uint64_t q, std::uint64_t x0, Mode mode,
                   const CheckOptions& opt = {});
    void feed(std::uint64_t p);
    // Residues whose deadline falls short of x_end.
    void finish(std::uint64_t x_end);
    double h(double x) const;
    std::uint64_t stream_end(std::uint64_t x_end) const;

    const std::vector<Failure>& failures() const { return failures_; }
    std::uint64_t primes_scanned() const { return scanned_; }
    const std::vector<double>& deadlines() const { return deadline_; }
    const std::vector<std::uint64_t>& residues() const { return residues_; }

private:
    void anchor(std::uint32_t idx, double at);

    HParams hp_;
    FactorData fd_;
    Mode mode_;
    CheckOptions opt_;
    std::vector<std::int32_t> index_;  // residue -> compact index, -1 if not coprime
    std::vector<std::uint64_t> residues_;
    std::vector<double> deadline_;
    std::vector<std::int64_t> count_;
    std::vector<Failure> failures_;
    std::uint64_t scanned_ = 0;
};

CheckReport check1(HParams hp, std::uint64_t q, std::uint64_t x0, std::uint64_t x_end,
                   const CheckOptions& opt = {});
CheckReport check_sqrt(HParams hp, std::uint64_t q, std::uint64_t x0, std::uint64_t x_end,
                       const CheckOptions& opt = {});

struct ExceptionRow {
    std::uint64_t q = 0;
    std::uint64_t x0 = 0;
    std::uint64_t x_end = 0;
};

struct ExceptionBlock {
    HParams hp;
    double m = 0;
    double ell = 0;
    std::string header;
    std::vector<ExceptionRow> rows;
};

// Runs every row of the block; rows are independent and scanned in parallel.
std::vector<CheckReport> run_exception_block(const ExceptionBlock& block, Mode mode, int jobs,
                                             const CheckOptions& opt = {});

}  // namespace apg::checkers
