#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "apg/checkers.hpp"
#include "apg/report.hpp"
#include "apg/tables.hpp"
#include "apg/thm1.hpp"

namespace apg::suites {

using report::Record;

struct Options {
    int jobs = 1;
    std::optional<double> slack;  // overrides every per-check default when set
    int sample_grid = 400;
    std::string data_dir = "data";
    double slack_or(double fallback) const { return slack ? *slack : fallback; }
    std::string path(const std::string& file) const { return data_dir + "/" + file; }
};

// Anchors of the small-q table sit on minimal integer x0, so they are checked
// with a much smaller relative guard than the default.
inline constexpr double kAnchorSlack = 1e-12;

std::vector<Record> thm1_at(const thm1::ParamSet& p, std::uint64_t q, std::optional<double> x,
                            bool sqrt_mode, const Options& opt);
// Finite test at x0(q) for all q in [q_lo, q_hi]; failures listed in `allowed`
// (the exception rows of the matching block) are expected.
std::vector<Record> thm1_range(const thm1::ParamSet& p, std::uint64_t q_lo, std::uint64_t q_hi,
                               bool sqrt_mode, const std::vector<std::uint64_t>& allowed,
                               const Options& opt);
std::vector<Record> thm1_tables(const std::vector<thm1::ParamSet>& rows, const Options& opt);

std::vector<Record> thm2_at(std::uint64_t q, double log_x, double rho, bool sqrt_mode,
                            const Options& opt);
std::vector<Record> thm2_anchors(const tables::SmallQ& t, const Options& opt);
std::vector<Record> thm2_ranges(const tables::SmallQ& t, const Options& opt);
std::vector<Record> thm2_thresholds(const std::vector<tables::Threshold>& t, const Options& opt);

// Coarse claims at 220 and 500, refined at 35 and 67, refined first claim on [35, 1000].
std::vector<Record> thm3_default(const Options& opt);
std::vector<Record> thm3_at(std::uint64_t q, bool sqrt_claim, bool refined, const Options& opt);

std::vector<Record> corollary(std::uint64_t q_lo, std::uint64_t q_hi, const Options& opt);

// max |theta(y)| over a log grid of [y_lo, y_hi].
std::vector<Record> lemma5(int points, double y_lo, double y_hi, const Options& opt);

std::vector<Record> lemma8(const majorant::Constants& c, const Options& opt);

std::vector<Record> exceptions(const std::vector<checkers::ExceptionBlock>& blocks,
                               checkers::Mode mode, const Options& opt);

}  // namespace apg::suites
