#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/zeta.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>

#include "apg/arith.hpp"
#include "apg/sieve.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace apg;
using Big = boost::multiprecision::cpp_bin_float_50;

namespace {

// zeta'/zeta by a central difference of a 50-digit zeta.
double zeta_log_deriv_oracle(double s) {
    Big x(s), h("1e-15");
    Big d = (boost::math::zeta(x + h) - boost::math::zeta(x - h)) / (2 * h);
    return static_cast<double>(d / boost::math::zeta(x));
}

double von_mangoldt(std::uint64_t n) {
    for (std::uint64_t p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            return n == 1 ? std::log(double(p)) : 0;
        }
    return n > 1 ? std::log(double(n)) : 0;
}

double simpson_sin2(double y, int panels) {
    auto f = [](double t) { return t == 0 ? 1.0 : std::pow(std::sin(t) / t, 2); };
    double h = y / panels, acc = f(0) + f(y);
    for (int i = 1; i < panels; ++i) acc += f(i * h) * (i % 2 ? 4 : 2);
    return acc * h / 3;
}

}  // namespace

TEST_CASE("factorize: small examples") {
    auto one = factorize(1);
    CHECK(one.phi == 1);
    CHECK(one.omega == 0);
    CHECK(one.prime_log_sum == 0);
    auto twelve = factorize(12);
    CHECK(twelve.phi == 4);
    CHECK(twelve.omega == 2);
    CHECK(twelve.prime_log_sum == doctest::Approx(std::log(2.0) + std::log(3.0) / 2));
    CHECK(factorize(35).phi == 24);
    CHECK_THROWS(factorize(0));
}

TEST_CASE("factorize agrees with a gcd count and with the spf path") {
    auto spf = spf_table(20000);
    for (std::uint64_t q = 1; q <= 3000; ++q) REQUIRE(factorize(q).phi == testing::naive_phi(q));
    for (std::uint64_t q = 1; q <= 20000; ++q) {
        auto a = factorize(q), b = factorize(q, spf);
        REQUIRE(a.phi == b.phi);
        REQUIRE(a.factors == b.factors);
        if (q >= 3) {
            // phi(6) = 2 is the one exception to phi(q) >= sqrt(q) past q = 2
            REQUIRE((double(a.phi) >= std::sqrt(double(q)) || q == 6));
            REQUIRE(a.log_disc >= 0);
            REQUIRE(a.log_disc == doctest::Approx(a.phi * std::log(double(q)) - a.phi * a.prime_log_sum));
        }
    }
}

TEST_CASE("digamma against boost and the recurrence") {
    const double euler = 0.57721566490153286;
    CHECK(std::fabs(digamma(1.0) + euler) < 1e-13);
    CHECK(std::fabs(digamma(2.0) - (1 - euler)) < 1e-13);
    CHECK(std::fabs(digamma(0.5) - (-euler - 2 * std::log(2.0))) < 1e-13);
    for (double s = 0.5; s <= 50; s += 0.5) {
        REQUIRE(std::fabs(digamma(s + 1) - digamma(s) - 1 / s) < 1e-11);
        REQUIRE(digamma(s) == doctest::Approx(boost::math::digamma(s)).epsilon(1e-13));
    }
    for (double s : {0.625, 1.375, 3.1, 11.875}) {
        double oracle = static_cast<double>(boost::math::digamma(Big(s)));
        CHECK(std::fabs(double(digamma(quad(s)) - quad(oracle))) < 1e-15);
    }
}

TEST_CASE("zeta'/zeta against a 50-digit oracle and the Dirichlet series") {
    for (double s : {1.25, 1.75, 2.0, 3.25, 5.25, 12.25}) {
        double oracle = zeta_log_deriv_oracle(s);
        CHECK(zeta_log_deriv(s) == doctest::Approx(oracle).epsilon(1e-13));
        CHECK(std::fabs(double(zeta_log_deriv(quad(s))) - oracle) < 1e-15 * std::fabs(oracle) + 1e-17);
    }
    CHECK(zeta_log_deriv(2.0) == doctest::Approx(-0.5699609930945).epsilon(1e-12));
    // -sum Lambda(n) n^-s; the tail past 2000 is below 1e-30 at s = 12.25
    double series = 0;
    for (std::uint64_t n = 2; n <= 2000; ++n) series -= von_mangoldt(n) * std::pow(double(n), -12.25);
    CHECK(zeta_log_deriv(12.25) == doctest::Approx(series).epsilon(1e-13));
    CHECK(series == doctest::Approx(-1.43e-4).epsilon(0.01));
    for (double s = 4; s <= 30; s += 0.5) REQUIRE(std::fabs(zeta_log_deriv(s)) <= 2 * std::log(2.0) * std::pow(2, -s));
}

TEST_CASE("quad and double zeta and digamma agree") {
    for (double s : {1.25, 2.75, 6.25}) {
        auto [z, dz] = zeta_and_deriv(quad(s));
        CHECK(double(z) == doctest::Approx(static_cast<double>(boost::math::zeta(Big(s)))).epsilon(1e-15));
        CHECK(double(dz / z) == doctest::Approx(zeta_log_deriv(s)).epsilon(1e-13));
    }
}

TEST_CASE("sin^2 integral") {
    CHECK(sin2_integral(1e-3) == doctest::Approx(1e-3).epsilon(1e-6));
    CHECK(sin2_integral(1.0) == doctest::Approx(simpson_sin2(1.0, 20000)).epsilon(1e-13));
    // 1 - 1/9 + 2/225 - 1/2205 + ... from the Taylor series of sin^2 t / t^2
    CHECK(sin2_integral(1.0) == doctest::Approx(1 - 1.0 / 9 + 2.0 / 225 - 1.0 / 2205).epsilon(2e-5));
    CHECK(sin2_integral(37.5) == doctest::Approx(simpson_sin2(37.5, 400000)).epsilon(1e-12));
    CHECK(sin2_integral(400.0) == doctest::Approx(simpson_sin2(400.0, 2000000)).epsilon(1e-11));
    double y = 1e6;
    CHECK(std::fabs(sin2_integral(y) - (M_PI / 2 - 5e-7)) <= 2.5e-13 + 1e-15);
}

TEST_CASE("theta stays in [-1, 1]") {
    for (double y : {0.01, 0.3, 5.0, 6.0, 49.9, 50.1, 100.0, 9999.0, 10001.0, 1e6}) {
        double t = theta_of(y).theta;
        CHECK(std::fabs(t) <= 1 + 1e-6);
    }
    double y = 0.01;
    double direct = 4 * y * y * (simpson_sin2(y, 200) - M_PI / 2 + 1 / (2 * y));
    CHECK(theta_of(y).theta == doctest::Approx(direct).epsilon(1e-6));
    // the cosine tail form and direct quadrature meet at the switch points
    CHECK(cos_tail(100.0) == doctest::Approx(theta_of(50.0).theta).epsilon(1e-9));
}
