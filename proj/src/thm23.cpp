#include "apg/thm23.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace apg::thm23 {

namespace {

constexpr double kPi = M_PI;

// phi(q)/sqrt(x) without forming sqrt(x).
double ratio(double log_phi, double log_x) { return std::exp(log_phi - log_x / 2); }

struct Sides {
    double inv_T;
    double h_over_x;
};

// h is enlarged by phi sqrt(x) log x for the sqrt claim.
Sides sides(double r, double L, double rho, double log_x, bool sqrt_mode) {
    double extra = sqrt_mode ? log_x : 0;
    return {kPi * r * (0.5 + (rho + extra) / L), r * (0.5 * L + rho + extra)};
}

}  // namespace

double E_of(std::uint64_t q) { return q <= 12 ? 9.3 : 4; }

double ell_of(double log_q) {
    if (!(log_q > 1)) throw std::domain_error("l(q) needs q >= 3");
    return log_q * std::log(log_q);
}

Context make_context(const FactorData& fd, double log_x, double rho, bool sqrt_mode) {
    Context c;
    c.q = fd.q;
    c.log_x = log_x;
    c.rho = rho;
    double L = 2 * std::log(double(fd.q)) + log_x;
    c.beta = L / kPi;
    Sides s = sides(ratio(std::log(double(fd.phi)), log_x), L, rho, log_x, sqrt_mode);
    c.T = 1 / s.inv_T;
    c.E_q = E_of(fd.q);
    return c;
}

FG thm2_FG(const FactorData& fd, double log_x, double E) {
    double lq = std::log(double(fd.q));
    double phi = double(fd.phi);
    double lphi = std::log(phi);
    double r = ratio(lphi, log_x);
    double L = 2 * lq + log_x;
    double lsx = log_x / 2 - lphi;  // log(sqrt(x)/phi)
    double c = std::log(2 / kPi);
    double P = (c + 2 * lq + lsx) * (c + lsx) / kPi;
    double tail = (0.79 + 16.08 / L) * kPi * kPi;
    FG out;
    out.F = (P + 13.42 * lq + 81.86 + 84.1 / phi) * r + tail * r / L;
    out.G = E + (P + 13.42 * lq) * (lq + log_x / 2) * r - 0.747 * lq +
            (81.86 + 84.1 / phi) * L * r / 2 + tail * r / 2;
    out.Gs = out.G + out.F * log_x + std::log(11.0 / 6);
    return out;
}

double refined_E(const FactorData& fd, double log_x, double rho, bool sqrt_mode) {
    double lq = std::log(double(fd.q));
    double phi = double(fd.phi);
    double r = ratio(std::log(phi), log_x);
    double L = 2 * lq + log_x;
    double beta = L / kPi;
    Sides s = sides(r, L, rho, log_x, sqrt_mode);
    double T = 1 / s.inv_T;
    double ex = std::exp(-log_x / 2);
    return std::log(2 / kPi) + 2.53 + 1.638 / phi +
           2 * std::log(2 * kPi) / (kPi * beta) * (1 - 1 / beta) + 1 / beta + 2 * 2.89 / T +
           3.7 * std::exp(-log_x / 6) + fd.omega * (std::log(2.0) + log_x) * ex +
           1.7 * s.h_over_x * ex;
}

std::vector<BoundEval> verify_thm2_at(const FactorData& fd, double log_x, double rho,
                                      bool sqrt_mode, double slack) {
    FG fg = thm2_FG(fd, log_x);
    double L = 2 * std::log(double(fd.q)) + log_x;
    Sides s = sides(ratio(std::log(double(fd.phi)), log_x), L, rho, log_x, sqrt_mode);
    std::vector<BoundEval> out;
    out.push_back(check_geq("main", (1 - fg.F) * rho, sqrt_mode ? fg.Gs : fg.G, slack));
    out.push_back(check_leq("inv-T", s.inv_T, 1.0 / 20, slack));
    out.push_back(check_leq("h-over-x", s.h_over_x, 5.0 / 6, slack));
    out.push_back(check_flag("log-x-at-least-6", log_x >= 6, "precondition"));
    return out;
}

LargeQ thm2_tilde(double m, double lq, double rho, bool sqrt_mode) {
    double ell = ell_of(lq);
    double ml = m * ell;
    double lml = std::log(ml);
    double phi_lo = lq / 2, phi_hi = lq;  // log of sqrt q and of q
    double c = std::log(2 / kPi);
    // sqrt(x0)/phi = m l(q) exactly, so P does not depend on phi.
    double P = (c + 2 * lq + lml) * (c + lml) / kPi;
    double L_lo = 2 * (lml + lq + phi_lo);
    double L_hi = 2 * (lml + lq + phi_hi);
    double inv_phi = std::exp(-phi_lo);
    double tail = (0.79 + 16.08 / L_lo) * kPi * kPi;
    LargeQ t;
    t.F = (P + 13.42 * lq + 81.86 + 84.1 * inv_phi) / ml + tail / (L_lo * ml);
    t.G = 4 + (P + 13.42 * lq) * (L_hi / 2) / ml - 0.747 * lq +
          (81.86 + 84.1 * inv_phi) * L_hi / (2 * ml) + tail / (2 * ml);
    double rhs = t.G;
    double num = rho / 2;
    double hx = lml + 2 * lq + rho;
    if (sqrt_mode) {
        double log_x0 = 2 * (lml + phi_hi);
        rhs += t.F * log_x0 + std::log(11.0 / 6);
        num += lml + phi_hi;
        hx += 2 * (lml + phi_hi);
    }
    t.rhs = rhs;
    t.main_margin = (1 - t.F) * rho - rhs;
    t.inv_T = kPi / ml * (0.5 + num / (lml + lq + phi_lo));
    t.h_over_x = hx / ml;
    return t;
}

std::vector<BoundEval> verify_thm2_largeq(double m, double lq0, double rho, bool sqrt_mode,
                                          int scan_points, double slack) {
    LargeQ t = thm2_tilde(m, lq0, rho, sqrt_mode);
    std::vector<BoundEval> out;
    out.push_back(check_geq("main-at-q0", (1 - t.F) * rho, t.rhs, slack));
    out.push_back(check_leq("inv-T-at-q0", t.inv_T, 1.0 / 20, slack));
    out.push_back(check_leq("h-over-x-at-q0", t.h_over_x, 5.0 / 6, slack));
    // (1 - F)rho - G must not decrease in q. Sampled, not proved; the grid
    // runs past q0 since that is the direction the extrapolation uses.
    double lo = std::log(3.0);
    double hi = std::max(2 * lq0, lq0 + 20);
    double prev = thm2_tilde(m, lo, rho, sqrt_mode).main_margin;
    double worst_step = std::numeric_limits<double>::infinity();
    for (int i = 1; i < scan_points; ++i) {
        double L = lo + (hi - lo) * i / (scan_points - 1);
        double cur = thm2_tilde(m, L, rho, sqrt_mode).main_margin;
        worst_step = std::min(worst_step, cur - prev);
        prev = cur;
    }
    BoundEval scan = check_geq("monotone-scan", worst_step, 0, 0);
    scan.kind = "scan";
    out.push_back(scan);
    return out;
}

std::vector<BoundEval> verify_thm3(const FactorData& fd, Claim claim, bool refined, double slack) {
    std::vector<BoundEval> out;
    if (fd.q < 14) {
        out.push_back(check_flag("q-at-least-14", false, "domain"));
        return out;
    }
    double log_x = double(fd.q);
    bool sq = claim == Claim::sqrt;
    double E = refined ? refined_E(fd, log_x, 0, sq) : E_of(fd.q);
    FG fg = thm2_FG(fd, log_x, E);
    out.push_back(check_leq("F-below-1", fg.F, 1, slack));
    out.push_back(check_leq(sq ? "Gs-nonpositive" : "G-nonpositive", sq ? fg.Gs : fg.G, 0, slack));
    double L = 2 * std::log(double(fd.q)) + log_x;
    Sides s = sides(ratio(std::log(double(fd.phi)), log_x), L, 0, log_x, sq);
    out.push_back(check_leq("inv-T", s.inv_T, 1.0 / 20, slack));
    out.push_back(check_leq("h-over-x", s.h_over_x, 5.0 / 6, slack));
    if (refined) out.push_back(check_leq("refined-E-below-E", E, E_of(fd.q), slack));
    return out;
}

double corollary_H(double B) {
    return std::sqrt((4 + 4 * B + 2 * B * B) / (4 + 4 * B + B * B));
}

std::uint64_t corollary_n(const FactorData& fd) {
    return std::uint64_t(std::ceil(70 * double(fd.phi) * std::log(double(fd.q))));
}

std::vector<BoundEval> verify_corollary(const FactorData& fd, std::uint64_t n, double slack) {
    double phi = double(fd.phi);
    double A = 30 + 2 * std::log(double(fd.q) * double(n));
    double B = phi * A / double(n);
    double H = corollary_H(B);
    double e = A * (2 / H - 1) - 30;
    std::vector<BoundEval> out;
    out.push_back(check_geq("A(2/H-1)-at-least-30", A * (2 / H - 1), 30, slack));
    double inner = 2 * std::exp(e) - 1;
    out.push_back(check_geq("exp-side", 2 * std::exp(e), 1, slack));
    double rhs = inner > 0 ? double(n) / A * (std::sqrt(inner) - 1) : -1;
    out.push_back(check_leq("phi-bound", phi, rhs, slack));
    return out;
}

namespace {

double thm2_point_margin(const FactorData& fd, double m, double rho, bool sqrt_mode) {
    double lq = std::log(double(fd.q));
    double log_x = 2 * std::log(m * double(fd.phi) * ell_of(lq));
    auto ev = verify_thm2_at(fd, log_x, rho, sqrt_mode);
    if (!all_pass(ev)) return -std::numeric_limits<double>::infinity();
    return min_margin(ev);
}

template <class Pred>
std::vector<std::uint64_t> scan_q(std::uint64_t q_lo, std::uint64_t q_hi, int jobs,
                                  const std::vector<std::uint32_t>& spf, Pred bad_q) {
    std::vector<std::uint64_t> bad;
    std::int64_t n = std::int64_t(q_hi - q_lo + 1);
#pragma omp parallel num_threads(std::max(1, jobs))
    {
        std::vector<std::uint64_t> local;
#pragma omp for schedule(dynamic, 256) nowait
        for (std::int64_t i = 0; i < n; ++i) {
            std::uint64_t q = q_lo + std::uint64_t(i);
            if (bad_q(factorize(q, spf))) local.push_back(q);
        }
#pragma omp critical
        bad.insert(bad.end(), local.begin(), local.end());
    }
    std::sort(bad.begin(), bad.end());
    return bad;
}

}  // namespace

std::vector<std::uint64_t> thm2_range_failures_serial(std::uint64_t q_lo, std::uint64_t q_hi,
                                                      double m, double rho, bool sqrt_mode,
                                                      const std::vector<std::uint32_t>& spf) {
    std::vector<std::uint64_t> bad;
    for (std::uint64_t q = q_lo; q <= q_hi; ++q)
        if (!(thm2_point_margin(factorize(q, spf), m, rho, sqrt_mode) > -1e300)) bad.push_back(q);
    return bad;
}

std::vector<std::uint64_t> thm2_range_failures(std::uint64_t q_lo, std::uint64_t q_hi, double m,
                                               double rho, bool sqrt_mode,
                                               const std::vector<std::uint32_t>& spf, int jobs) {
    return scan_q(q_lo, q_hi, jobs, spf, [&](const FactorData& fd) {
        return !(thm2_point_margin(fd, m, rho, sqrt_mode) > -1e300);
    });
}

double thm2_range_min_margin(std::uint64_t q_lo, std::uint64_t q_hi, double m, double rho,
                             bool sqrt_mode, const std::vector<std::uint32_t>& spf, int jobs) {
    double worst = std::numeric_limits<double>::infinity();
    std::int64_t n = std::int64_t(q_hi - q_lo + 1);
#pragma omp parallel for num_threads(std::max(1, jobs)) reduction(min : worst) schedule(dynamic, 256)
    for (std::int64_t i = 0; i < n; ++i)
        worst = std::min(worst,
                         thm2_point_margin(factorize(q_lo + std::uint64_t(i), spf), m, rho, sqrt_mode));
    return worst;
}

std::vector<std::uint64_t> corollary_failures(std::uint64_t q_lo, std::uint64_t q_hi,
                                              const std::vector<std::uint32_t>& spf, int jobs) {
    return scan_q(q_lo, q_hi, jobs, spf, [](const FactorData& fd) {
        return !all_pass(verify_corollary(fd, corollary_n(fd)));
    });
}

}  // namespace apg::thm23
