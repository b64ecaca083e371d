#include "apg/suites.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "apg/arith.hpp"
#include "apg/majorant.hpp"
#include "apg/sieve.hpp"
#include "apg/thm23.hpp"

namespace apg::suites {

namespace {

using report::Json;

void append(std::vector<Record>& out, const std::string& suite, const Json& inputs,
            const std::vector<BoundEval>& evals) {
    for (const BoundEval& e : evals) out.push_back(report::from_eval(suite, inputs, e));
}

Json params_json(const thm1::ParamSet& p, bool sqrt_mode) {
    return {{"alpha", p.alpha},
            {"delta", p.delta},
            {"rho", p.rho},
            {"m", sqrt_mode ? p.m_sqrt : p.m},
            {"ell", sqrt_mode ? p.ell_sqrt : p.ell},
            {"mode", sqrt_mode ? "sqrt" : "plain"}};
}

std::vector<std::uint32_t> spf_for(std::uint64_t q_hi) { return spf_table(std::max<std::uint64_t>(q_hi, 16)); }

}  // namespace

std::vector<Record> thm1_at(const thm1::ParamSet& p, std::uint64_t q, std::optional<double> x,
                            bool sqrt_mode, const Options& opt) {
    FactorData fd = factorize(q);
    double xv = x ? *x : thm1::x0_of(p, fd, sqrt_mode);
    Json in = params_json(p, sqrt_mode);
    in["q"] = q;
    in["x"] = xv;
    std::vector<Record> out;
    append(out, "thm1-at", in, thm1::verify_at(p, fd, xv, sqrt_mode, opt.slack_or(kDefaultSlack)));
    return out;
}

std::vector<Record> thm1_range(const thm1::ParamSet& p, std::uint64_t q_lo, std::uint64_t q_hi,
                               bool sqrt_mode, const std::vector<std::uint64_t>& allowed,
                               const Options& opt) {
    auto spf = spf_for(q_hi);
    auto fails = thm1::failing_q(p, q_lo, q_hi, sqrt_mode, spf, opt.jobs);
    std::vector<std::uint64_t> unexpected;
    for (auto q : fails)
        if (std::find(allowed.begin(), allowed.end(), q) == allowed.end()) unexpected.push_back(q);
    Json in = params_json(p, sqrt_mode);
    in["q_lo"] = q_lo;
    in["q_hi"] = q_hi;
    in["failing_q"] = fails;
    in["unexpected"] = unexpected;
    BoundEval e = check_flag("finite-test-outside-exception-rows", unexpected.empty(), "scan");
    e.lhs = double(unexpected.size());
    e.margin = -e.lhs;
    return {report::from_eval("thm1-range", in, e)};
}

std::vector<Record> thm1_tables(const std::vector<thm1::ParamSet>& rows, const Options& opt) {
    std::vector<std::vector<Record>> parts(rows.size() * 2);
    thm1::LargeQOptions lo;
    lo.slack = opt.slack_or(kDefaultSlack);
#pragma omp parallel for num_threads(std::max(1, opt.jobs)) schedule(dynamic, 1)
    for (std::int64_t i = 0; i < std::int64_t(parts.size()); ++i) {
        const thm1::ParamSet& p = rows[i / 2];
        bool sq = i % 2 == 1;
        Json in = params_json(p, sq);
        in["log_q0"] = sq ? p.log_q0_sqrt : p.log_q0;
        append(parts[i], "thm1-tables", in, thm1::verify_largeq(p, sq, lo));
    }
    std::vector<Record> out;
    for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
    return out;
}

std::vector<Record> thm2_at(std::uint64_t q, double log_x, double rho, bool sqrt_mode,
                            const Options& opt) {
    Json in{{"q", q}, {"log_x", log_x}, {"rho", rho}, {"mode", sqrt_mode ? "sqrt" : "plain"}};
    std::vector<Record> out;
    append(out, "thm2-at", in,
           thm23::verify_thm2_at(factorize(q), log_x, rho, sqrt_mode, opt.slack_or(kDefaultSlack)));
    return out;
}

std::vector<Record> thm2_anchors(const tables::SmallQ& t, const Options& opt) {
    std::vector<Record> out;
    for (const auto& a : t.anchors) {
        Json in{{"q", a.q}, {"x0", a.x0}, {"rho", 100}, {"mode", a.sqrt_mode ? "sqrt" : "plain"}};
        append(out, "thm2-anchors", in,
               thm23::verify_thm2_at(factorize(a.q), std::log(double(a.x0)), 100, a.sqrt_mode,
                                     opt.slack_or(kAnchorSlack)));
    }
    return out;
}

std::vector<Record> thm2_ranges(const tables::SmallQ& t, const Options& opt) {
    std::vector<Record> out;
    std::uint64_t q_max = 16;
    for (const auto& r : t.ranges) q_max = std::max(q_max, r.q_hi);
    auto spf = spf_for(q_max);
    for (const auto& r : t.ranges) {
        auto fails = thm23::thm2_range_failures(r.q_lo, r.q_hi, r.m, 100, r.sqrt_mode, spf, opt.jobs);
        double worst = thm23::thm2_range_min_margin(r.q_lo, r.q_hi, r.m, 100, r.sqrt_mode, spf, opt.jobs);
        Json in{{"q_lo", r.q_lo}, {"q_hi", r.q_hi}, {"m", r.m}, {"rho", 100},
                {"mode", r.sqrt_mode ? "sqrt" : "plain"}, {"failing_q", fails}};
        BoundEval e = check_flag("finite-test-on-range", fails.empty(), "scan");
        e.lhs = worst;
        e.margin = worst;
        out.push_back(report::from_eval("thm2-ranges", in, e));
    }
    return out;
}

std::vector<Record> thm2_thresholds(const std::vector<tables::Threshold>& t, const Options& opt) {
    std::vector<std::vector<Record>> parts(t.size());
#pragma omp parallel for num_threads(std::max(1, opt.jobs)) schedule(dynamic, 1)
    for (std::int64_t i = 0; i < std::int64_t(t.size()); ++i) {
        Json in{{"m", t[i].m}, {"q0", t[i].q0_text}, {"rho", 100},
                {"mode", t[i].sqrt_mode ? "sqrt" : "plain"}};
        append(parts[i], "thm2-thresholds", in,
               thm23::verify_thm2_largeq(t[i].m, t[i].log_q0, 100, t[i].sqrt_mode, 200,
                                         opt.slack_or(kDefaultSlack)));
    }
    std::vector<Record> out;
    for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
    return out;
}

std::vector<Record> thm3_at(std::uint64_t q, bool sqrt_claim, bool refined, const Options& opt) {
    Json in{{"q", q}, {"claim", sqrt_claim ? "sqrt" : "first"}, {"refined", refined}};
    std::vector<Record> out;
    append(out, "thm3", in,
           thm23::verify_thm3(factorize(q), sqrt_claim ? thm23::Claim::sqrt : thm23::Claim::first,
                              refined, opt.slack_or(kDefaultSlack)));
    return out;
}

std::vector<Record> thm3_default(const Options& opt) {
    std::vector<Record> out;
    for (auto [q, sq, refined] : {std::tuple{220, false, false}, std::tuple{35, false, true},
                                  std::tuple{500, true, false}, std::tuple{67, true, true}}) {
        auto part = thm3_at(std::uint64_t(q), sq, refined, opt);
        out.insert(out.end(), part.begin(), part.end());
    }
    std::vector<std::uint64_t> fails;
    for (std::uint64_t q = 35; q <= 1000; ++q)
        if (!report::passed(thm3_at(q, false, true, opt))) fails.push_back(q);
    BoundEval e = check_flag("refined-first-claim-on-[35,1000]", fails.empty(), "scan");
    e.lhs = double(fails.size());
    e.margin = -e.lhs;
    out.push_back(report::from_eval("thm3", Json{{"q_lo", 35}, {"q_hi", 1000}, {"failing_q", fails}}, e));
    return out;
}

std::vector<Record> corollary(std::uint64_t q_lo, std::uint64_t q_hi, const Options& opt) {
    auto spf = spf_for(q_hi);
    auto fails = thm23::corollary_failures(q_lo, q_hi, spf, opt.jobs);
    Json in{{"q_lo", q_lo}, {"q_hi", q_hi}, {"failing_q", fails}};
    BoundEval e = check_flag("corollary-at-ceil(70 phi log q)", fails.empty(), "scan");
    e.lhs = double(fails.size());
    e.margin = -e.lhs;
    return {report::from_eval("corollary", in, e)};
}

std::vector<Record> lemma5(int points, double y_lo, double y_hi, const Options&) {
    double worst = 0, worst_y = y_lo;
    for (int i = 0; i < points; ++i) {
        double y = y_lo * std::pow(y_hi / y_lo, points == 1 ? 0.0 : double(i) / (points - 1));
        double t = std::fabs(theta_of(y).theta);
        if (t > worst) worst = t, worst_y = y;
    }
    Json in{{"points", points}, {"y_lo", y_lo}, {"y_hi", y_hi}, {"worst_y", worst_y}};
    return {report::from_eval("lemma5", in, check_leq("max-abs-theta", worst, 1 + 1e-6, 0))};
}

std::vector<Record> lemma8(const majorant::Constants& c, const Options& opt) {
    std::vector<Record> out;
    Json none = Json::object();
    append(out, "lemma8", none, majorant::verify_constants(c));

    auto scan = majorant::scan_S(c, 10284, opt.jobs);
    BoundEval s = check_flag("S-sign-pattern-[2,10284]", scan.unexpected.empty() && scan.worst_ratio > 1,
                             "scan");
    s.lhs = scan.worst_ratio;
    s.rhs = 1;
    s.margin = scan.worst_ratio - 1;
    out.push_back(report::from_eval("lemma8", Json{{"n_max", 10284}, {"unexpected", scan.unexpected}}, s));

    // Each pair of terms is negative at n = 10284, and a pair a n^-s + b n^-(s+1/2)
    // with a < 0 < b stays negative for larger n.
    auto pairs = majorant::pair_terms(10284, c);
    double worst_pair = -std::numeric_limits<double>::infinity();
    for (quad v : pairs) worst_pair = std::max(worst_pair, double(v));
    out.push_back(report::from_eval("lemma8", Json{{"n", 10284}},
                                    check_leq("pair-terms-negative", worst_pair, 0, 0)));

    auto maj = majorant::verify_majorant(c, 1e6, 2'000'000, opt.jobs, opt.sample_grid);
    Json in{{"gamma_max", 1e6}, {"cells", maj.cells}, {"worst_gamma", maj.worst_gamma},
            {"sample_grid", opt.sample_grid}, {"budget_exhausted", maj.budget_exhausted}};
    out.push_back(report::from_eval("lemma8", in, maj.interval));
    out.push_back(report::from_eval("lemma8", in, maj.tail));
    return out;
}

std::vector<Record> exceptions(const std::vector<checkers::ExceptionBlock>& blocks,
                               checkers::Mode mode, const Options& opt) {
    std::vector<Record> out;
    std::string suite = mode == checkers::Mode::sqrt ? "check-t6" : "check-t5";
    for (const auto& b : blocks) {
        for (const auto& r : checkers::run_exception_block(b, mode, opt.jobs)) {
            Record rec = report::from_check(suite, r);
            rec.inputs["block"] = b.header;
            out.push_back(rec);
        }
        if (b.rows.empty()) {
            BoundEval e = check_flag("no-exception-rows", true, "info");
            out.push_back(report::from_eval(suite, Json{{"block", b.header}}, e));
        }
    }
    return out;
}

}  // namespace apg::suites
