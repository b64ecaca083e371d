#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "apg/checkers.hpp"
#include "apg/majorant.hpp"
#include "apg/thm1.hpp"

namespace apg::tables {

// Accepts plain decimals and fractions such as 1.253/2.
double parse_number(const std::string& s);
// log of a positive integer or power of ten written as 1e438.
double parse_log(const std::string& s);

std::vector<checkers::ExceptionBlock> load_exceptions(const std::string& path);
std::vector<thm1::ParamSet> load_params(const std::string& path);
majorant::Constants load_constants(const std::string& path);

struct Anchor {
    bool sqrt_mode = false;
    std::uint64_t q = 0;
    std::uint64_t x0 = 0;
};

struct QRange {
    bool sqrt_mode = false;
    std::uint64_t q_lo = 0;
    std::uint64_t q_hi = 0;
    double m = 0;
};

struct SmallQ {
    std::vector<Anchor> anchors;
    std::vector<QRange> ranges;
};
SmallQ load_small_q(const std::string& path);

struct Threshold {
    bool sqrt_mode = false;
    double m = 0;
    double log_q0 = 0;
    std::string q0_text;
};
std::vector<Threshold> load_thresholds(const std::string& path);

}  // namespace apg::tables
