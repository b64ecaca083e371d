#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "apg/numeric.hpp"

namespace apg::majorant {

using i128 = __int128;

struct Constants {
    std::vector<i128> a_scaled;  // a_j * 10^7, exact
    std::vector<quad> s;         // s_j = 3/4 + j/2
    quad a(int j) const { return quad(a_scaled[j]) / quad(10000000); }
    int size() const { return int(a_scaled.size()); }
};

Constants table2();
Constants from_scaled(const std::vector<i128>& a_scaled);
i128 parse_i128(const std::string& s);
std::string to_string(i128 v);

double g_of(double gamma);
quad g_of(quad gamma);
// g cut off at |gamma| > 5: the function the majorant actually has to dominate.
quad g_truncated(quad gamma);
double f_of(double s, double gamma);
quad F_of(quad gamma, const Constants& c);
double F_majorant(double gamma, const Constants& c);

struct MajorantReport {
    BoundEval interval;  // F - g >= -1e-9 on [0, gamma_max]
    BoundEval tail;      // F >= 0 beyond gamma_max
    long cells = 0;
    double worst_lower_bound = 0;
    double worst_gamma = 0;
    bool budget_exhausted = false;
};

// Taylor-model certificate on cells of [0, gamma_max] (g cut off past 5), then
// the large-gamma expansion beyond. sample_grid is the number of starting cells.
MajorantReport verify_majorant(const Constants& c, double gamma_max = 1e6,
                               long step_budget = 2'000'000, int jobs = 1,
                               int sample_grid = 400);

struct SValue {
    quad value = 0;
    quad error = 0;  // bound on |computed - exact|
};

SValue S_of(std::uint64_t n, const Constants& c);
// The consecutive pairs a_{2k+1} n^{-s_{2k+1}} + a_{2k+2} n^{-s_{2k+2}} and the last term.
std::vector<quad> pair_terms(std::uint64_t n, const Constants& c);

struct SScan {
    std::vector<std::uint64_t> unexpected;  // n whose certified sign is not the expected one
    double worst_ratio = 0;                 // min over n of |S(n)| / error bound
};

// Expects S(n) < 0 for 2 <= n <= n_max except S(4) > 0.
SScan scan_S_serial(const Constants& c, std::uint64_t n_max);
SScan scan_S(const Constants& c, std::uint64_t n_max, int jobs);

std::vector<BoundEval> verify_constants(const Constants& c);

}  // namespace apg::majorant
