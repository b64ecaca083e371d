// Batch front end: runs one verification suite, writes a JSON-lines report and
// exits 0 iff every non-informational record passed.
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "apg/suites.hpp"
#include "apg/tables.hpp"

using namespace apg;
using suites::Record;

namespace {

void summarize(const std::vector<Record>& records) {
    std::map<std::string, std::pair<int, int>> per_suite;  // passed, total
    for (const Record& r : records) {
        if (r.kind == "info") continue;
        auto& [ok, total] = per_suite[r.suite];
        ++total;
        if (r.pass) ++ok;
        else
            std::printf("FAIL %-16s %-40s lhs=%.6g rhs=%.6g margin=%.3g\n", r.suite.c_str(),
                        r.name.c_str(), r.lhs, r.rhs, r.margin);
    }
    for (const auto& [suite, counts] : per_suite)
        std::printf("%-16s %d/%d passed\n", suite.c_str(), counts.first, counts.second);
    std::printf("%s\n", report::passed(records) ? "ALL PASS" : "FAILURES PRESENT");
}

thm1::ParamSet parse_params(const std::string& text) {
    // alpha delta rho m ell, separated by spaces or commas
    std::string s = text;
    for (char& c : s)
        if (c == ',') c = ' ';
    std::istringstream in(s);
    std::vector<std::string> f;
    for (std::string w; in >> w;) f.push_back(w);
    if (f.size() != 3 && f.size() != 5)
        throw CLI::ValidationError("--params", "expected alpha delta rho [m ell]");
    thm1::ParamSet p;
    p.alpha = tables::parse_number(f[0]);
    p.delta = tables::parse_number(f[1]);
    p.rho = tables::parse_number(f[2]);
    if (f.size() == 5) {
        p.m = p.m_sqrt = tables::parse_number(f[3]);
        p.ell = p.ell_sqrt = tables::parse_number(f[4]);
    }
    return p;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical verification of explicit prime-in-progression bounds"};
    app.require_subcommand(1);
    app.fallthrough();

    suites::Options opt;
    std::string out_path = "report.jsonl";
    double slack = -1;
    app.add_option("--jobs", opt.jobs, "worker threads")->check(CLI::PositiveNumber);
    app.add_option("--out", out_path, "report file (JSON lines)");
    app.add_option("--slack", slack, "relative guard for every inequality")->check(CLI::NonNegativeNumber);
    app.add_option("--sample-grid", opt.sample_grid, "starting cells of the majorant certificate")
        ->check(CLI::PositiveNumber);
    app.add_option("--data", opt.data_dir, "directory holding the table files");

    std::function<std::vector<Record>()> job;

    auto* verify = app.add_subcommand("verify", "check inequalities");
    verify->require_subcommand(1);

    std::string table4 = "", table5 = "", table6 = "", table7 = "", table8 = "", table2 = "";
    std::uint64_t q = 0, q_lo = 0, q_hi = 0;
    double x = 0, log_x = 0, rho = 100;
    int row = 1;
    bool sqrt_mode = false, refined = false;

    auto* t1at = verify->add_subcommand("thm1-at", "Theorem 1 test at x0(q), or over a q range");
    t1at->add_option("--table4", table4, "parameter rows");
    t1at->add_option("--row", row, "1-based row of the parameter table")->check(CLI::PositiveNumber);
    t1at->add_option("--q", q, "modulus");
    t1at->add_option("--x", x, "point (default x0(q))");
    t1at->add_option("--q-lo", q_lo, "range start");
    t1at->add_option("--q-hi", q_hi, "range end");
    t1at->add_option("--table5", table5, "exception rows allowed to fail in a range run");
    t1at->add_flag("--sqrt", sqrt_mode, "second claim");
    t1at->callback([&] {
        job = [&] {
            auto rows = tables::load_params(table4.empty() ? opt.path("table4.txt") : table4);
            if (std::size_t(row) > rows.size()) throw CLI::ValidationError("--row", "past the last row");
            const auto& p = rows[row - 1];
            if (q_hi == 0) {
                if (q < 3) throw CLI::ValidationError("--q", "need q >= 3 or --q-lo/--q-hi");
                return suites::thm1_at(p, q, x > 0 ? std::optional<double>(x) : std::nullopt, sqrt_mode, opt);
            }
            std::vector<std::uint64_t> allowed;
            auto blocks = tables::load_exceptions(
                !table5.empty() ? table5 : opt.path(sqrt_mode ? "table6.txt" : "table5.txt"));
            if (std::size_t(row) <= blocks.size())
                for (const auto& r : blocks[row - 1].rows) allowed.push_back(r.q);
            return suites::thm1_range(p, std::max<std::uint64_t>(3, q_lo), q_hi, sqrt_mode, allowed, opt);
        };
    });

    auto* t1tab = verify->add_subcommand("thm1-tables", "large-q tests for every parameter row");
    t1tab->add_option("--table4", table4, "parameter rows");
    t1tab->callback([&] {
        job = [&] {
            return suites::thm1_tables(tables::load_params(table4.empty() ? opt.path("table4.txt") : table4), opt);
        };
    });

    auto* t2 = verify->add_subcommand("thm2", "Theorem 2 test at one point");
    t2->add_option("--q", q, "modulus")->required()->check(CLI::Range(std::uint64_t(3), std::uint64_t(1) << 40));
    auto* xopt = t2->add_option("--x", x, "point");
    auto* lxopt = t2->add_option("--log-x", log_x, "log of the point");
    xopt->excludes(lxopt);
    t2->add_option("--rho", rho, "rho");
    t2->add_flag("--sqrt", sqrt_mode, "second claim");
    t2->callback([&] {
        job = [&] {
            double lx = *xopt ? std::log(x) : log_x;
            if (!(lx > 0)) throw CLI::ValidationError("--x", "give --x or --log-x");
            return suites::thm2_at(q, lx, rho, sqrt_mode, opt);
        };
    });

    auto* t2tab = verify->add_subcommand("thm2-tables", "small-q anchors, q ranges and large-q thresholds");
    t2tab->add_option("--table7", table7, "small-q anchors and ranges");
    t2tab->add_option("--table8", table8, "large-q thresholds");
    t2tab->callback([&] {
        job = [&] {
            auto small = tables::load_small_q(table7.empty() ? opt.path("table7.txt") : table7);
            auto out = suites::thm2_anchors(small, opt);
            auto more = suites::thm2_ranges(small, opt);
            out.insert(out.end(), more.begin(), more.end());
            more = suites::thm2_thresholds(tables::load_thresholds(table8.empty() ? opt.path("table8.txt") : table8), opt);
            out.insert(out.end(), more.begin(), more.end());
            return out;
        };
    });

    auto* t3 = verify->add_subcommand("thm3", "Theorem 3 thresholds (default points without --q)");
    t3->add_option("--q", q, "modulus");
    t3->add_flag("--sqrt", sqrt_mode, "second claim");
    t3->add_flag("--refined", refined, "use the refined constant");
    t3->callback([&] {
        job = [&] { return q ? suites::thm3_at(q, sqrt_mode, refined, opt) : suites::thm3_default(opt); };
    });

    q_lo = 0;
    auto* cor = verify->add_subcommand("corollary", "Corollary at n = ceil(70 phi(q) log q)");
    cor->add_option("--q-lo", q_lo, "range start");
    cor->add_option("--q-hi", q_hi, "range end");
    cor->callback([&] {
        job = [&] { return suites::corollary(std::max<std::uint64_t>(3, q_lo), q_hi ? q_hi : 10000, opt); };
    });

    int points = 500;
    double y_lo = 1e-2, y_hi = 1e6;
    auto* l5 = verify->add_subcommand("lemma5", "|theta| <= 1 on a log grid");
    l5->add_option("--points", points, "grid size")->check(CLI::PositiveNumber);
    l5->add_option("--y-lo", y_lo, "grid start")->check(CLI::PositiveNumber);
    l5->add_option("--y-hi", y_hi, "grid end")->check(CLI::PositiveNumber);
    l5->callback([&] { job = [&] { return suites::lemma5(points, y_lo, y_hi, opt); }; });

    auto* l8 = verify->add_subcommand("lemma8", "majorant constants, S(n) signs and the majorant");
    l8->add_option("--table2", table2, "constants file (default: the embedded table)");
    l8->callback([&] {
        job = [&] {
            return suites::lemma8(table2.empty() ? majorant::table2() : tables::load_constants(table2), opt);
        };
    });

    auto* check = app.add_subcommand("check", "prime scans over exception intervals");
    check->require_subcommand(1);
    int block = 0;
    auto add_table_check = [&](const char* name, const char* file, checkers::Mode mode) {
        auto* c = check->add_subcommand(name, std::string("rows of ") + file);
        c->add_option("--block", block, "1-based block (default: all)")->check(CLI::NonNegativeNumber);
        c->add_option("--table", name[1] == '5' ? table5 : table6, "table file");
        c->callback([&, file, mode, name] {
            job = [&, file, mode, name] {
                const std::string& given = name[1] == '5' ? table5 : table6;
                auto blocks = tables::load_exceptions(given.empty() ? opt.path(file) : given);
                if (block > 0) {
                    if (std::size_t(block) > blocks.size()) throw CLI::ValidationError("--block", "no such block");
                    blocks = {blocks[block - 1]};
                }
                return suites::exceptions(blocks, mode, opt);
            };
        });
    };
    add_table_check("t5", "table5.txt", checkers::Mode::single);
    add_table_check("t6", "table6.txt", checkers::Mode::sqrt);

    std::uint64_t x0 = 0, x_end = 0;
    std::string params;
    auto* custom = check->add_subcommand("custom", "one scan with explicit parameters");
    custom->add_option("--q", q, "modulus")->required()->check(CLI::Range(3, 10000));
    custom->add_option("--x0", x0, "scan start")->required();
    custom->add_option("--x", x_end, "scan end")->required();
    custom->add_option("--params", params, "alpha delta rho")->required();
    custom->add_flag("--sqrt", sqrt_mode, "CheckSqrt instead of Check1");
    custom->callback([&] {
        job = [&] {
            if (x0 >= x_end) throw CLI::ValidationError("--x0", "must be below --x");
            thm1::ParamSet p = parse_params(params);
            checkers::HParams hp{p.alpha, p.delta, p.rho};
            checkers::CheckOptions co;
            co.sieve_jobs = opt.jobs;
            auto r = sqrt_mode ? checkers::check_sqrt(hp, q, x0, x_end, co) : checkers::check1(hp, q, x0, x_end, co);
            return std::vector<Record>{report::from_check("check-custom", r)};
        };
    });

    std::string in_path;
    auto* regen = app.add_subcommand("regen-report", "re-read a report, rewrite it and recompute the verdict");
    regen->add_option("--in", in_path, "existing report")->required();
    regen->callback([&] { job = [&] { return report::read(in_path); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }
    if (slack >= 0) opt.slack = slack;

    try {
        std::vector<Record> records = job();
        report::Writer writer(out_path);
        for (const Record& r : records) writer.write(r);
        summarize(records);
        std::printf("report: %s\n", out_path.c_str());
        return report::passed(records) ? 0 : 1;
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
