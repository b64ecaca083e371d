#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "apg/numeric.hpp"

namespace apg {

struct FactorData {
    std::uint64_t q = 1;
    std::vector<std::pair<std::uint64_t, int>> factors;
    std::uint64_t phi = 1;
    int omega = 0;
    double prime_log_sum = 0;  // sum over p | q of log p / (p - 1)
    double log_disc = 0;       // log of the cyclotomic discriminant
};

FactorData factorize(std::uint64_t q);
// Same result, using a smallest-prime-factor table that covers q.
FactorData factorize(std::uint64_t q, const std::vector<std::uint32_t>& spf);

// psi(s) = Gamma'(s)/Gamma(s) for s > 0: shift up, then the asymptotic series.
template <class R>
R digamma(R s);

// zeta'(s)/zeta(s) for s > 1 via Euler-Maclaurin for zeta and zeta'.
double zeta_log_deriv(double s);
quad zeta_log_deriv(quad s);
// zeta and zeta' separately, exposed for testing.
template <class R>
std::pair<R, R> zeta_and_deriv(R s);

// Integral of sin^2 t / t^2 over [0, y].
double sin2_integral(double y);
// x^2 * integral of cos v / v^2 over [x, inf).
double cos_tail(double x);

struct Theta {
    double y = 0;
    double theta = 0;
};

// theta with  sin2_integral(y) = pi/2 - 1/(2y) + theta/(4y^2).
Theta theta_of(double y);

}  // namespace apg
