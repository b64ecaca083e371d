#include "apg/numeric.hpp"

#include <algorithm>
#include <limits>

namespace apg {

namespace {

BoundEval finish(std::string name, double lhs, double rhs, double margin, double slack) {
    BoundEval e;
    e.name = std::move(name);
    e.lhs = lhs;
    e.rhs = rhs;
    e.margin = margin;
    double scale = std::max({std::fabs(lhs), std::fabs(rhs), 1.0});
    // Equality fails: the underlying inequalities are strict or we cannot tell.
    e.pass = std::isfinite(margin) && margin > slack * scale && margin > 0;
    return e;
}

}  // namespace

BoundEval check_geq(std::string name, double lhs, double rhs, double slack) {
    return finish(std::move(name), lhs, rhs, lhs - rhs, slack);
}

BoundEval check_leq(std::string name, double lhs, double rhs, double slack) {
    return finish(std::move(name), lhs, rhs, rhs - lhs, slack);
}

BoundEval check_flag(std::string name, bool ok, std::string kind) {
    BoundEval e;
    e.name = std::move(name);
    e.lhs = ok ? 1 : 0;
    e.rhs = 1;
    e.margin = ok ? 0 : -1;
    e.pass = ok;
    e.kind = std::move(kind);
    return e;
}

bool all_pass(const std::vector<BoundEval>& evals) {
    return std::all_of(evals.begin(), evals.end(),
                       [](const BoundEval& e) { return e.pass || e.kind == "info"; });
}

double min_margin(const std::vector<BoundEval>& evals) {
    double m = std::numeric_limits<double>::infinity();
    for (const auto& e : evals)
        if (e.kind == "bound") m = std::min(m, e.margin);
    return m;
}

std::string to_string(quad x, int digits) {
    char buf[128];
    quadmath_snprintf(buf, sizeof buf, "%.*Qg", digits, x);
    return buf;
}

quad parse_quad(const std::string& s) { return strtoflt128(s.c_str(), nullptr); }

}  // namespace apg
