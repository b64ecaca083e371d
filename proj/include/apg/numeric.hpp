#pragma once

#include <quadmath.h>

#include <cmath>
#include <string>
#include <vector>

namespace apg {

using quad = __float128;

inline constexpr double kDefaultSlack = 1e-9;

// One checked inequality. margin is lhs - rhs for ">=" and rhs - lhs for "<=",
// so a positive margin always means the inequality holds.
struct BoundEval {
    std::string name;
    double lhs = 0;
    double rhs = 0;
    double margin = 0;
    bool pass = false;
    std::string kind = "bound";
};

BoundEval check_geq(std::string name, double lhs, double rhs, double slack = kDefaultSlack);
BoundEval check_leq(std::string name, double lhs, double rhs, double slack = kDefaultSlack);
// kind "info" entries are reported but do not affect all_pass.
// Records a fact that is not a numeric comparison (domain error, scan verdict).
BoundEval check_flag(std::string name, bool ok, std::string kind);

bool all_pass(const std::vector<BoundEval>& evals);
double min_margin(const std::vector<BoundEval>& evals);

// Overloads so that templated kernels work for both double and __float128.
inline double mlog(double x) { return std::log(x); }
inline double mexp(double x) { return std::exp(x); }
inline double msqrt(double x) { return std::sqrt(x); }
inline double mfabs(double x) { return std::fabs(x); }
inline double mpow(double x, double y) { return std::pow(x, y); }
inline quad mlog(quad x) { return logq(x); }
inline quad mexp(quad x) { return expq(x); }
inline quad msqrt(quad x) { return sqrtq(x); }
inline quad mfabs(quad x) { return fabsq(x); }
inline quad mpow(quad x, quad y) { return powq(x, y); }

template <class R> inline R pi_v() { return R(M_PI); }
template <> inline quad pi_v<quad>() { return acosq(quad(-1)); }

std::string to_string(quad x, int digits = 36);
quad parse_quad(const std::string& s);

}  // namespace apg
