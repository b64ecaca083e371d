#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "apg/arith.hpp"
#include "apg/numeric.hpp"

namespace apg::thm1 {

struct ParamSet {
    double alpha = 0.5;
    double delta = 1;
    double rho = 30;
    double m = 70;
    double ell = 6;
    double log_q0 = 0;  // q0 is kept in log form; 1e438 does not fit anywhere else
    double m_sqrt = 130;
    double ell_sqrt = 5.3;
    double log_q0_sqrt = 0;
    std::string label;
};

double h1(double alpha, double delta, double rho, const FactorData& fd, double x);
double hsqrt(double alpha, double delta, double rho, const FactorData& fd, double x);

// x0(q) = (m phi(q) log q)^2, with m' in sqrt mode.
double x0_of(const ParamSet& p, const FactorData& fd, bool sqrt_mode);

struct BetaT {
    double beta = 0;
    double T = 0;
};

// Throws std::domain_error when beta <= 0.
BetaT beta_T(const ParamSet& p, const FactorData& fd, double x, bool sqrt_mode);
double F(const ParamSet& p, const FactorData& fd, double x, bool sqrt_mode);
double Gbar(const ParamSet& p, const FactorData& fd, double x, bool sqrt_mode);
// G with log(qT) itself; Gbar >= G.
double G(const ParamSet& p, const FactorData& fd, double x, bool sqrt_mode);

// Main inequality, 1/T <= 1/20, h/x <= 5/6, x >= 23000 and T >= 20.
std::vector<BoundEval> verify_at(const ParamSet& p, const FactorData& fd, double x,
                                 bool sqrt_mode, double slack = kDefaultSlack);
// The rearranged form in which the left side increases and the right side
// decreases in x. Returns lhs - rhs.
double rearranged_margin(const ParamSet& p, const FactorData& fd, double x);

struct Tilde {
    double F0t = 0;
    double G0t = 0;
    double beta0 = 0;
    double T_minus = 0;
    double T_plus = 0;
    double S = 0;
    double K = 0;  // the coefficient 1 + 2/(pi b0) + 2/(pi b0^2) + 4*2.89/(pi b0 T-)
};

Tilde tilde(const ParamSet& p, double log_q, bool sqrt_mode);

// A log q - B log log q - C, with A, B, C from the tilde quantities.
struct ABC {
    double A = 0, B = 0, C = 0;
    double value(double log_q) const;
};
ABC abc(const ParamSet& p, double log_q, bool sqrt_mode);

struct LargeQOptions {
    double slack = kDefaultSlack;
    int max_cells = 2'000'000;
};

// Checks at q0 (or q0'): the A log q - B log log q - C >= 0 inequality, the
// monotonicity guard, 1/T- <= 1/20, the h/x bound and, in sqrt mode,
// F0t <= alpha/(alpha+1). When the guard fails at q0, a q1 where it holds is
// located and the main inequality is certified on [q0, q1] cell by cell.
std::vector<BoundEval> verify_largeq(const ParamSet& p, bool sqrt_mode,
                                     const LargeQOptions& opt = {});

// Finite test at x0(q) for every q in [q_lo, q_hi]; returns the q that fail.
std::vector<std::uint64_t> failing_q_serial(const ParamSet& p, std::uint64_t q_lo,
                                            std::uint64_t q_hi, bool sqrt_mode,
                                            const std::vector<std::uint32_t>& spf);
std::vector<std::uint64_t> failing_q(const ParamSet& p, std::uint64_t q_lo, std::uint64_t q_hi,
                                     bool sqrt_mode, const std::vector<std::uint32_t>& spf,
                                     int jobs);

}  // namespace apg::thm1
