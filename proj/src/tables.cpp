#include "apg/tables.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace apg::tables {

namespace {

struct Line {
    int number;
    std::vector<std::string> fields;
};

std::vector<Line> read_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(path + ": cannot open");
    std::vector<Line> out;
    std::string text;
    int n = 0;
    while (std::getline(in, text)) {
        ++n;
        if (auto hash = text.find('#'); hash != std::string::npos) text.resize(hash);
        std::istringstream ss(text);
        Line line{n, {}};
        for (std::string f; ss >> f;) line.fields.push_back(f);
        if (!line.fields.empty()) out.push_back(std::move(line));
    }
    return out;
}

[[noreturn]] void bad(const std::string& path, const Line& l, const std::string& what) {
    throw std::runtime_error(path + ":" + std::to_string(l.number) + ": " + what);
}

std::uint64_t parse_u64(const std::string& s) {
    std::size_t used = 0;
    unsigned long long v = std::stoull(s, &used);
    if (used != s.size()) throw std::invalid_argument("not an integer: " + s);
    return v;
}

template <class Fn>
auto guarded(const std::string& path, const Line& l, Fn fn) {
    try {
        return fn();
    } catch (const std::logic_error& e) {
        bad(path, l, e.what());
    }
}

}  // namespace

double parse_number(const std::string& s) {
    auto slash = s.find('/');
    std::size_t used = 0;
    if (slash == std::string::npos) {
        double v = std::stod(s, &used);
        if (used != s.size()) throw std::invalid_argument("not a number: " + s);
        return v;
    }
    double den = parse_number(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: " + s);
    return parse_number(s.substr(0, slash)) / den;
}

double parse_log(const std::string& s) {
    auto e = s.find_first_of("eE");
    if (e == std::string::npos) {
        double v = parse_number(s);
        if (!(v > 0)) throw std::invalid_argument("expected a positive value: " + s);
        return std::log(v);
    }
    double mant = parse_number(s.substr(0, e));
    double expo = parse_number(s.substr(e + 1));
    if (!(mant > 0)) throw std::invalid_argument("expected a positive value: " + s);
    return std::log(mant) + expo * std::log(10.0);
}

std::vector<checkers::ExceptionBlock> load_exceptions(const std::string& path) {
    std::vector<checkers::ExceptionBlock> out;
    for (const Line& l : read_lines(path)) {
        const auto& f = l.fields;
        if (f[0] == "block") {
            if (f.size() != 6) bad(path, l, "block needs alpha delta rho m ell");
            checkers::ExceptionBlock b;
            guarded(path, l, [&] {
                b.hp = {parse_number(f[1]), parse_number(f[2]), parse_number(f[3])};
                b.m = parse_number(f[4]);
                b.ell = parse_number(f[5]);
                return 0;
            });
            b.header = f[1] + " " + f[2] + " " + f[3] + " " + f[4] + " " + f[5];
            out.push_back(b);
            continue;
        }
        if (out.empty()) bad(path, l, "row before any block header");
        if (f.size() != 3) bad(path, l, "row needs q x0 x_end");
        out.back().rows.push_back(guarded(path, l, [&] {
            return checkers::ExceptionRow{parse_u64(f[0]), parse_u64(f[1]), parse_u64(f[2])};
        }));
    }
    return out;
}

std::vector<thm1::ParamSet> load_params(const std::string& path) {
    std::vector<thm1::ParamSet> out;
    for (const Line& l : read_lines(path)) {
        const auto& f = l.fields;
        if (f.size() != 9) bad(path, l, "row needs 9 columns");
        out.push_back(guarded(path, l, [&] {
            thm1::ParamSet p;
            p.alpha = parse_number(f[0]);
            p.delta = parse_number(f[1]);
            p.rho = parse_number(f[2]);
            p.m = parse_number(f[3]);
            p.ell = parse_number(f[4]);
            p.log_q0 = parse_log(f[5]);
            p.m_sqrt = parse_number(f[6]);
            p.ell_sqrt = parse_number(f[7]);
            p.log_q0_sqrt = parse_log(f[8]);
            p.label = f[0] + " " + f[1] + " " + f[2] + " " + f[3] + " " + f[4];
            return p;
        }));
    }
    return out;
}

majorant::Constants load_constants(const std::string& path) {
    std::vector<majorant::i128> a;
    for (const Line& l : read_lines(path)) {
        if (l.fields.size() != 2) bad(path, l, "row needs j a_scaled");
        guarded(path, l, [&] {
            if (parse_u64(l.fields[0]) != a.size() + 1) throw std::invalid_argument("rows out of order");
            a.push_back(majorant::parse_i128(l.fields[1]));
            return 0;
        });
    }
    return majorant::from_scaled(a);
}

SmallQ load_small_q(const std::string& path) {
    SmallQ out;
    for (const Line& l : read_lines(path)) {
        const auto& f = l.fields;
        bool range = f[0].ends_with("-range");
        std::string mode = range ? f[0].substr(0, f[0].size() - 6) : f[0];
        if (mode != "plain" && mode != "sqrt") bad(path, l, "unknown mode " + f[0]);
        if (f.size() != (range ? 4u : 3u)) bad(path, l, "wrong column count");
        guarded(path, l, [&] {
            if (range)
                out.ranges.push_back({mode == "sqrt", parse_u64(f[1]), parse_u64(f[2]), parse_number(f[3])});
            else
                out.anchors.push_back({mode == "sqrt", parse_u64(f[1]), parse_u64(f[2])});
            return 0;
        });
    }
    return out;
}

std::vector<Threshold> load_thresholds(const std::string& path) {
    std::vector<Threshold> out;
    for (const Line& l : read_lines(path)) {
        const auto& f = l.fields;
        if (f.size() != 3 || (f[0] != "plain" && f[0] != "sqrt")) bad(path, l, "row needs mode m q0");
        out.push_back(guarded(path, l, [&] {
            return Threshold{f[0] == "sqrt", parse_number(f[1]), parse_log(f[2]), f[2]};
        }));
    }
    return out;
}

}  // namespace apg::tables
