#include <cmath>
#include <random>

#include "apg/sieve.hpp"
#include "apg/tables.hpp"
#include "apg/thm1.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace apg;
using namespace apg::thm1;
using testing::find;

namespace {

ParamSet row1() {
    ParamSet p;
    p.log_q0 = std::log(392975.0);
    p.log_q0_sqrt = std::log(18886967.0);
    return p;
}

}  // namespace

TEST_CASE("interval half-widths") {
    CHECK(h1(0, 0, 1, factorize(1), 4) == doctest::Approx(2));
    double expect = 2 * (0.5 * std::log(23656.0) + std::log(3.0) + 30) * std::sqrt(23656.0);
    CHECK(h1(0.5, 1, 30, factorize(3), 23656) == doctest::Approx(expect).epsilon(1e-15));
    CHECK(hsqrt(0, 0, 0, factorize(1), std::exp(2.0)) == doctest::Approx(2 * std::exp(1.0)));
    CHECK(hsqrt(0.5, 1, 30, factorize(3), 81589) == doctest::Approx(h1(1.5, 1, 30, factorize(3), 81589)));
    for (double x = 2; x < 1e12; x *= 1.7)
        REQUIRE(h1(0.5, 1, 30, factorize(7), x * 1.7) > h1(0.5, 1, 30, factorize(7), x));
}

TEST_CASE("beta and T") {
    auto p = row1();
    auto fd = factorize(3);
    double x0 = x0_of(p, fd, false);
    CHECK(x0 == doctest::Approx(std::pow(70 * 2 * std::log(3.0), 2)));
    CHECK(beta_T(p, fd, x0, false).beta == doctest::Approx(6 * std::log(70.0)));
    CHECK(beta_T(p, fd, x0, true).T != doctest::Approx(beta_T(p, fd, x0, false).T));
    double prev = 0;
    for (double x = 1e4; x < 1e14; x *= 1.3) {
        double T = beta_T(p, factorize(11), x, false).T;
        REQUIRE(T > prev);
        prev = T;
    }
    CHECK_THROWS_AS(beta_T(p, factorize(1000), 100, false), std::domain_error);
}

TEST_CASE("F and Gbar") {
    auto p = row1();
    auto fd3 = factorize(3);
    // q = 3 is an exception row: F only drops below 1 by the end of its interval
    CHECK(F(p, fd3, x0_of(p, fd3, false), false) > 1);
    double f_end = F(p, fd3, 193269, false);
    CHECK(f_end > 0);
    CHECK(f_end < 1);
    CHECK(Gbar(p, fd3, x0_of(p, fd3, false), false) > 2);
    auto fd = factorize(17);
    double prev = 1e300;
    for (double x = 1e6; x < 1e12; x *= 1.5) {
        if (beta_T(p, fd, x, false).T < 20) continue;
        double f = F(p, fd, x, false);
        REQUIRE(f < prev);
        REQUIRE(Gbar(p, fd, x, false) >= G(p, fd, x, false));
        prev = f;
    }
    CHECK(F(p, fd, 1e30, false) < 1e-9);
}

TEST_CASE("finite test at single points") {
    auto p = row1();
    CHECK(all_pass(verify_at(p, factorize(3), 193269, false)));
    CHECK_FALSE(find(verify_at(p, factorize(3), 23656, false), "main").pass);
    CHECK(all_pass(verify_at(p, factorize(5), 1e10, false)));
}

TEST_CASE("the rearranged form gives the same verdict") {
    std::mt19937_64 rng(11);
    auto rows = tables::load_params(testing::data("table4.txt"));
    int compared = 0;
    for (int i = 0; i < 1000; ++i) {
        const ParamSet& p = rows[rng() % 11];
        std::uint64_t q = 3 + rng() % 5000;
        auto fd = factorize(q);
        double x = x0_of(p, fd, false) * std::exp(std::uniform_real_distribution<double>(-1, 6)(rng));
        if (x < 23000) continue;
        auto evals = verify_at(p, fd, x, false, 0);
        if (evals.size() < 2 || std::fabs(evals[0].margin) < 1e-9) continue;
        REQUIRE((evals[0].margin > 0) == (rearranged_margin(p, fd, x) > 0));
        ++compared;
    }
    CHECK(compared > 500);
}

TEST_CASE("a pass at x1 persists to larger x") {
    auto p = row1();
    for (std::uint64_t q : {3, 10, 24, 97, 1000}) {
        auto fd = factorize(q);
        bool passed = false;
        for (double x = 23000; x < 1e16; x *= 1.25) {
            auto evals = verify_at(p, fd, x, false);
            bool now = evals.size() > 1 && find(evals, "main").pass;
            REQUIRE((!passed || now));
            passed |= now;
        }
        CHECK(passed);
    }
}

TEST_CASE("tilde quantities") {
    auto p = row1();
    auto t = tilde(p, p.log_q0, false);
    CHECK(t.T_plus == doctest::Approx(t.beta0 * p.m / (2 * p.alpha + p.delta)));
    CHECK(t.F0t < 1);
    CHECK(t.T_minus >= 20);
    auto far = tilde(p, 1e6, false);
    CHECK(far.T_minus / far.T_plus == doctest::Approx(1).epsilon(1e-4));
    for (std::uint64_t q = 392975; q < 3929750; q += 91373) {
        auto fd = factorize(q);
        double x0 = x0_of(p, fd, false);
        auto tq = tilde(p, std::log(double(q)), false);
        REQUIRE(tq.F0t >= F(p, fd, x0, false));
        REQUIRE(tq.G0t >= Gbar(p, fd, x0, false));
    }
}

TEST_CASE("large-q tests for every parameter row") {
    auto rows = tables::load_params(testing::data("table4.txt"));
    REQUIRE(rows.size() == 12);
    for (const auto& p : rows)
        for (bool sq : {false, true}) {
            auto evals = verify_largeq(p, sq);
            INFO(p.label << (sq ? " sqrt" : " plain"));
            CHECK(all_pass(evals));
        }
    // q0 = 10^438 only exists in log form
    CHECK(rows.back().log_q0 == doctest::Approx(438 * std::log(10.0)));
}

TEST_CASE("range scan: serial and parallel agree with the exception rows") {
    auto p = row1();
    auto spf = spf_table(20000);
    auto serial = failing_q_serial(p, 3, 20000, false, spf);
    CHECK(serial == failing_q(p, 3, 20000, false, spf, 3));
    auto blocks = tables::load_exceptions(testing::data("table5.txt"));
    std::vector<std::uint64_t> rows;
    for (const auto& r : blocks[0].rows) rows.push_back(r.q);
    CHECK(serial == rows);
}
