#include <cmath>

#include "apg/sieve.hpp"
#include "apg/tables.hpp"
#include "apg/thm23.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace apg;
using namespace apg::thm23;
using testing::find;

TEST_CASE("l(q) and E(q)") {
    CHECK_THROWS_AS(ell_of(std::log(2.0)), std::domain_error);
    CHECK(ell_of(std::log(3.0)) == doctest::Approx(std::log(3.0) * std::log(std::log(3.0))));
    CHECK(E_of(13) < E_of(12));
}

TEST_CASE("F and G in the large-x limit") {
    auto fd = factorize(7);
    auto fg = thm2_FG(fd, 1e4);
    CHECK(fg.F < 1e-100);
    CHECK(fg.G == doctest::Approx(E_of(7) - 0.747 * std::log(7.0)).epsilon(1e-6));
}

TEST_CASE("single points") {
    CHECK(all_pass(verify_thm2_at(factorize(3), std::log(743717.0), 100, false)));
    CHECK(all_pass(verify_thm2_at(factorize(3), std::log(921530.0), 100, true)));
    CHECK_FALSE(find(verify_thm2_at(factorize(3), 6, 100, false), "main").pass);
    double lx = 2 * std::log(134 * 12 * ell_of(std::log(13.0)));
    CHECK(all_pass(verify_thm2_at(factorize(13), lx, 100, false)));
}

TEST_CASE("small-q anchors") {
    auto t = tables::load_small_q(testing::data("table7.txt"));
    REQUIRE(t.anchors.size() == 20);
    for (const auto& a : t.anchors) {
        INFO("q=" << a.q << (a.sqrt_mode ? " sqrt" : " plain"));
        CHECK(all_pass(verify_thm2_at(factorize(a.q), std::log(double(a.x0)), 100, a.sqrt_mode, 1e-12)));
    }
    // q = 11 sits right on the edge of 1/T <= 1/20: one unit below x0 already fails
    auto below = verify_thm2_at(factorize(11), std::log(10928152.0), 100, false, 1e-12);
    CHECK(find(below, "main").pass);
    CHECK_FALSE(find(below, "inv-T").pass);
}

TEST_CASE("q ranges: serial and parallel") {
    auto spf = spf_table(6000);
    auto t = tables::load_small_q(testing::data("table7.txt"));
    for (const auto& r : t.ranges) {
        auto serial = thm2_range_failures_serial(r.q_lo, r.q_hi, r.m, 100, r.sqrt_mode, spf);
        CHECK(serial.empty());
        CHECK(serial == thm2_range_failures(r.q_lo, r.q_hi, r.m, 100, r.sqrt_mode, spf, 3));
        CHECK(thm2_range_min_margin(r.q_lo, r.q_hi, r.m, 100, r.sqrt_mode, spf, 2) > 1e-4);
    }
}

TEST_CASE("large-q thresholds") {
    auto t = tables::load_thresholds(testing::data("table8.txt"));
    REQUIRE(t.size() == 16);
    int failing = 0;
    for (const auto& row : t) {
        auto evals = verify_thm2_largeq(row.m, row.log_q0, 100, row.sqrt_mode);
        bool known = (!row.sqrt_mode && row.m == 15) || (row.sqrt_mode && row.m >= 19);
        INFO("m=" << row.m << (row.sqrt_mode ? " sqrt" : " plain"));
        CHECK(all_pass(evals) == !known);
        if (known) {
            ++failing;
            CHECK(find(evals, "main-at-q0").margin < -1);
        }
    }
    CHECK(failing == 4);
    // the plain m = 15 inequality holds from 6709 on, not from 5670
    CHECK(thm2_tilde(15, std::log(6709.0), 100, false).main_margin > 0);
    CHECK(thm2_tilde(15, std::log(6708.0), 100, false).main_margin < 0);
    CHECK(all_pass(verify_thm2_largeq(12, std::log(240344.0), 100, false)));
}

TEST_CASE("Theorem 3 thresholds") {
    CHECK(all_pass(verify_thm3(factorize(220), Claim::first, false)));
    CHECK_FALSE(all_pass(verify_thm3(factorize(211), Claim::first, false)));
    CHECK(all_pass(verify_thm3(factorize(500), Claim::sqrt, false)));
    CHECK_FALSE(all_pass(verify_thm3(factorize(476), Claim::sqrt, false)));
    CHECK(all_pass(verify_thm3(factorize(35), Claim::first, true)));
    CHECK(all_pass(verify_thm3(factorize(67), Claim::sqrt, true)));
    // the refined claim already holds at 34; it first fails at 27
    CHECK(all_pass(verify_thm3(factorize(34), Claim::first, true)));
    CHECK_FALSE(all_pass(verify_thm3(factorize(27), Claim::first, true)));
    CHECK(find(verify_thm3(factorize(13), Claim::first, true), "q-at-least-14").kind == "domain");
    for (std::uint64_t q = 35; q <= 1000; ++q) {
        auto fd = factorize(q);
        auto refined = verify_thm3(fd, Claim::first, true);
        REQUIRE(all_pass(refined));
        REQUIRE(find(refined, "refined-E-below-E").pass);
    }
}

TEST_CASE("corollary") {
    auto fd3 = factorize(3);
    CHECK(corollary_n(fd3) == 154);
    CHECK(all_pass(verify_corollary(fd3, 154)));
    auto fd101 = factorize(101);
    CHECK(all_pass(verify_corollary(fd101, corollary_n(fd101))));
    double prev = 0;
    for (double B = 0; B <= 1000; B += 0.25) {
        double H = corollary_H(B);
        REQUIRE(H >= 1);
        REQUIRE(H < std::sqrt(2.0));
        REQUIRE(H >= prev);
        prev = H;
    }
    auto spf = spf_table(10000);
    CHECK(corollary_failures(3, 10000, spf, 2).empty());
}

TEST_CASE("verdicts are monotone in x") {
    for (std::uint64_t q : {3, 12, 13, 50, 400}) {
        auto fd = factorize(q);
        bool passed = false;
        double prevF = 1e300, prevG = 1e300;
        for (double lx = 6; lx < 80; lx += 0.25) {
            auto fg = thm2_FG(fd, lx);
            REQUIRE(fg.F <= prevF);
            REQUIRE(fg.G <= prevG + 1e-12);
            prevF = fg.F, prevG = fg.G;
            bool now = find(verify_thm2_at(fd, lx, 100, false), "main").pass;
            REQUIRE((!passed || now));
            passed |= now;
        }
    }
}
