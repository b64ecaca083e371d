#pragma once

#include <cstdint>
#include <vector>

#include "apg/arith.hpp"
#include "apg/numeric.hpp"

namespace apg::thm23 {

// Everything here takes log x rather than x: Theorem 3 needs x = e^q.
struct Context {
    std::uint64_t q = 3;
    double log_x = 0;
    double rho = 100;
    double beta = 0;
    double T = 0;
    double E_q = 0;
};

double E_of(std::uint64_t q);
// l(q) = log q log log q; needs q >= 3.
double ell_of(double log_q);

Context make_context(const FactorData& fd, double log_x, double rho, bool sqrt_mode);

struct FG {
    double F = 0;
    double G = 0;
    double Gs = 0;
};

FG thm2_FG(const FactorData& fd, double log_x, double E);
inline FG thm2_FG(const FactorData& fd, double log_x) { return thm2_FG(fd, log_x, E_of(fd.q)); }

// The true value of the constant that E(q) bounds, with Theorem 2's beta and T.
double refined_E(const FactorData& fd, double log_x, double rho, bool sqrt_mode);

std::vector<BoundEval> verify_thm2_at(const FactorData& fd, double log_x, double rho,
                                      bool sqrt_mode, double slack = kDefaultSlack);

// Upper bounds for F, G (or Gs) and the two side conditions at x0 = (m phi l)^2,
// obtained by replacing phi(q) by q or sqrt q. Margins of the three checks.
struct LargeQ {
    double F = 0;
    double G = 0;
    double rhs = 0;  // G, or its sqrt-claim counterpart
    double main_margin = 0;
    double inv_T = 0;
    double h_over_x = 0;
};
LargeQ thm2_tilde(double m, double log_q, double rho, bool sqrt_mode);

std::vector<BoundEval> verify_thm2_largeq(double m, double log_q0, double rho, bool sqrt_mode,
                                          int scan_points = 200,
                                          double slack = kDefaultSlack);

enum class Claim { first, sqrt };

std::vector<BoundEval> verify_thm3(const FactorData& fd, Claim claim, bool refined,
                                   double slack = kDefaultSlack);

double corollary_H(double B);
std::vector<BoundEval> verify_corollary(const FactorData& fd, std::uint64_t n,
                                        double slack = kDefaultSlack);
std::uint64_t corollary_n(const FactorData& fd);  // ceil(70 phi(q) log q)

// Range scans over q (x0 = (m phi(q) l(q))^2 for Theorem 2). Return failing q.
std::vector<std::uint64_t> thm2_range_failures_serial(std::uint64_t q_lo, std::uint64_t q_hi,
                                                      double m, double rho, bool sqrt_mode,
                                                      const std::vector<std::uint32_t>& spf);
std::vector<std::uint64_t> thm2_range_failures(std::uint64_t q_lo, std::uint64_t q_hi, double m,
                                               double rho, bool sqrt_mode,
                                               const std::vector<std::uint32_t>& spf, int jobs);
double thm2_range_min_margin(std::uint64_t q_lo, std::uint64_t q_hi, double m, double rho,
                             bool sqrt_mode, const std::vector<std::uint32_t>& spf, int jobs);
std::vector<std::uint64_t> corollary_failures(std::uint64_t q_lo, std::uint64_t q_hi,
                                              const std::vector<std::uint32_t>& spf, int jobs);

}  // namespace apg::thm23
