#include "apg/arith.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <complex>
#include <stdexcept>

namespace apg {

namespace {

void finish_factor_data(FactorData& fd) {
    fd.phi = fd.q;
    fd.prime_log_sum = 0;
    for (auto [p, e] : fd.factors) {
        fd.phi = fd.phi / p * (p - 1);
        fd.prime_log_sum += std::log(double(p)) / double(p - 1);
    }
    fd.omega = int(fd.factors.size());
    double ph = double(fd.phi);
    fd.log_disc = ph * std::log(double(fd.q)) - ph * fd.prime_log_sum;
}

// Bernoulli numbers B_2 .. B_24 as exact fractions.
constexpr long long kB2kNum[12] = {1, -1, 1, -1, 5, -691, 7, -3617, 43867, -174611, 854513, -236364091};
constexpr long long kB2kDen[12] = {6, 30, 42, 30, 66, 2730, 6, 510, 798, 330, 138, 2730};

template <class R>
R bernoulli2k(int k) {
    return R(kB2kNum[k - 1]) / R(kB2kDen[k - 1]);
}

template <class R>
struct Precision;
template <>
struct Precision<double> {
    static constexpr double shift = 8;
    static constexpr int psi_terms = 6;
    static constexpr int zeta_n = 10;
    static constexpr int zeta_terms = 8;
};
template <>
struct Precision<quad> {
    static constexpr double shift = 24;
    static constexpr int psi_terms = 11;
    static constexpr int zeta_n = 24;
    static constexpr int zeta_terms = 12;
};

}  // namespace

FactorData factorize(std::uint64_t q) {
    if (q == 0) throw std::invalid_argument("factorize: q must be positive");
    FactorData fd;
    fd.q = q;
    std::uint64_t n = q;
    for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) n /= p, ++e;
        fd.factors.push_back({p, e});
    }
    if (n > 1) fd.factors.push_back({n, 1});
    finish_factor_data(fd);
    return fd;
}

FactorData factorize(std::uint64_t q, const std::vector<std::uint32_t>& spf) {
    if (q == 0) throw std::invalid_argument("factorize: q must be positive");
    if (q >= spf.size()) return factorize(q);
    FactorData fd;
    fd.q = q;
    std::uint64_t n = q;
    while (n > 1) {
        std::uint64_t p = spf[n];
        int e = 0;
        while (n % p == 0) n /= p, ++e;
        fd.factors.push_back({p, e});
    }
    finish_factor_data(fd);
    return fd;
}

template <class R>
R digamma(R s) {
    if (!(s > 0)) throw std::domain_error("digamma: argument must be positive");
    R acc = 0;
    while (s < R(Precision<R>::shift)) {
        acc -= R(1) / s;
        s += 1;
    }
    R inv2 = R(1) / (s * s);
    R pw = inv2;
    R series = 0;
    for (int k = 1; k <= Precision<R>::psi_terms; ++k) {
        series += bernoulli2k<R>(k) / R(2 * k) * pw;
        pw *= inv2;
    }
    return acc + mlog(s) - R(1) / (2 * s) - series;
}

template double digamma<double>(double);
template quad digamma<quad>(quad);

template <class R>
std::pair<R, R> zeta_and_deriv(R s) {
    if (!(s > 1)) throw std::domain_error("zeta: argument must exceed 1");
    const int N = Precision<R>::zeta_n;
    R z = 0, dz = 0;
    for (int n = 1; n < N; ++n) {
        R t = mpow(R(n), -s);
        z += t;
        dz -= mlog(R(n)) * t;
    }
    R lN = mlog(R(N));
    R Ns = mpow(R(N), -s);
    R N1s = Ns * R(N);
    z += N1s / (s - 1) + Ns / 2;
    dz += -N1s * lN / (s - 1) - N1s / ((s - 1) * (s - 1)) - Ns * lN / 2;
    // Correction terms B_2k/(2k)! * s(s+1)...(s+2k-2) * N^(-s-2k+1).
    R fact = 1;      // (2k)!
    R rising = 1;    // s(s+1)...(s+2k-2)
    R drising = 0;   // derivative of rising in s
    R Npow = Ns / R(N);
    for (int k = 1; k <= Precision<R>::zeta_terms; ++k) {
        fact *= R(2 * k - 1) * R(2 * k);
        if (k == 1) {
            rising = s;
            drising = 1;
        } else {
            for (int i = 2 * k - 3; i <= 2 * k - 2; ++i) {
                drising = drising * (s + i) + rising;
                rising *= (s + i);
            }
        }
        R c = bernoulli2k<R>(k) / fact;
        z += c * rising * Npow;
        dz += c * (drising - rising * lN) * Npow;
        Npow /= R(N) * R(N);
    }
    return {z, dz};
}

template std::pair<double, double> zeta_and_deriv<double>(double);
template std::pair<quad, quad> zeta_and_deriv<quad>(quad);

double zeta_log_deriv(double s) {
    auto [z, dz] = zeta_and_deriv(s);
    return dz / z;
}

quad zeta_log_deriv(quad s) {
    auto [z, dz] = zeta_and_deriv(s);
    return dz / z;
}

namespace {

using boost::math::quadrature::gauss_kronrod;

double sinc2(double t) {
    if (std::fabs(t) < 1e-4) return 1 - t * t / 3;
    double s = std::sin(t) / t;
    return s * s;
}

double integrate(auto f, double a, double b) {
    return gauss_kronrod<double, 31>::integrate(f, a, b, 15, 1e-14);
}

}  // namespace

double cos_tail(double x) {
    // Rotate the contour: v = x + i s turns the oscillatory tail into
    // Re(i e^{ix} * int_0^inf e^{-s} x^2/(x + i s)^2 ds).
    auto part = [x](double s, bool imag) {
        std::complex<double> w = x / std::complex<double>(x, s);
        std::complex<double> v = std::exp(-s) * w * w;
        return imag ? v.imag() : v.real();
    };
    double re = integrate([&](double s) { return part(s, false); }, 0, 45);
    double im = integrate([&](double s) { return part(s, true); }, 0, 45);
    std::complex<double> r = std::complex<double>(0, 1) * std::polar(1.0, x) *
                             std::complex<double>(re, im);
    return r.real();
}

double sin2_integral(double y) {
    if (!(y > 0)) throw std::domain_error("sin2_integral: y must be positive");
    if (y > 1e4) return M_PI / 2 - 0.5 / y + cos_tail(2 * y) / (4 * y * y);
    if (y <= 50) return integrate(sinc2, 0, y);
    double sum = 0;
    double a = 0;
    for (int k = 1; k * M_PI < y; ++k) {
        double b = k * M_PI;
        sum += integrate(sinc2, a, b);
        a = b;
    }
    return sum + integrate(sinc2, a, y);
}

Theta theta_of(double y) {
    if (!(y > 0)) throw std::domain_error("theta_of: y must be positive");
    // Direct subtraction loses about log10(4y^2) digits, so beyond moderate y
    // use the tail form, which is the same quantity without the cancellation.
    double t = y <= 50 ? 4 * y * y * (sin2_integral(y) - M_PI / 2 + 0.5 / y)
                       : cos_tail(2 * y);
    return {y, t};
}

}  // namespace apg
