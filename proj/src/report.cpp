#include "apg/report.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <stdexcept>

namespace apg::report {

namespace {

// JSON has no infinities; keep them readable instead of silently writing null.
Json number(double v) {
    if (std::isfinite(v)) return v;
    if (std::isnan(v)) return "nan";
    return v > 0 ? "inf" : "-inf";
}

double number_from(const Json& j) {
    if (j.is_number()) return j.get<double>();
    std::string s = j.get<std::string>();
    if (s == "inf") return INFINITY;
    if (s == "-inf") return -INFINITY;
    return NAN;
}

}  // namespace

Record from_eval(const std::string& suite, const Json& inputs, const BoundEval& e) {
    return {suite, e.name, inputs, e.lhs, e.rhs, e.margin, e.pass, e.kind};
}

Record from_check(const std::string& suite, const checkers::CheckReport& r) {
    Record rec;
    rec.suite = suite;
    rec.name = std::string(r.mode == checkers::Mode::sqrt ? "check-sqrt" : "check1") +
               " q=" + std::to_string(r.q);
    rec.inputs = {{"q", r.q}, {"x0", r.x0}, {"x_end", r.x_end}, {"primes_scanned", r.primes_scanned}};
    Json fails = Json::array();
    for (std::size_t i = 0; i < r.failures.size() && i < 20; ++i)
        fails.push_back({{"residue", r.failures[i].residue}, {"deadline", r.failures[i].deadline}});
    rec.inputs["failures"] = fails;
    rec.lhs = double(r.failures.size());
    rec.rhs = 0;
    rec.margin = r.failures.empty() ? 0.0 : -rec.lhs;
    rec.pass = r.pass();
    rec.kind = "scan";
    return rec;
}

bool passed(const std::vector<Record>& records) {
    for (const Record& r : records)
        if (r.kind != "info" && !r.pass) return false;
    return true;
}

Json to_json(const Record& r) {
    return {{"suite", r.suite},     {"name", r.name},         {"inputs", r.inputs},
            {"lhs", number(r.lhs)}, {"rhs", number(r.rhs)},   {"margin", number(r.margin)},
            {"pass", r.pass},       {"kind", r.kind}};
}

Record from_json(const Json& j) {
    Record r;
    r.suite = j.at("suite").get<std::string>();
    r.name = j.at("name").get<std::string>();
    r.inputs = j.value("inputs", Json::object());
    r.lhs = number_from(j.at("lhs"));
    r.rhs = number_from(j.at("rhs"));
    r.margin = number_from(j.at("margin"));
    r.pass = j.at("pass").get<bool>();
    r.kind = j.value("kind", "bound");
    return r;
}

Writer::Writer(const std::string& path) : out_(path) {
    if (!out_) throw std::runtime_error(path + ": cannot open for writing");
    std::time_t now = std::time(nullptr);
    char stamp[32];
    std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    out_ << Json{{"header", "apg-report"}, {"timestamp", stamp}}.dump() << '\n';
}

void Writer::write(const Record& r) { out_ << to_json(r).dump() << '\n'; }

std::vector<Record> read(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(path + ": cannot open");
    std::vector<Record> out;
    std::string line;
    int n = 0;
    while (std::getline(in, line)) {
        ++n;
        if (line.empty()) continue;
        try {
            Json j = Json::parse(line);
            if (j.contains("header")) continue;
            out.push_back(from_json(j));
        } catch (const nlohmann::json::exception& e) {
            throw std::runtime_error(path + ":" + std::to_string(n) + ": " + e.what());
        }
    }
    return out;
}

}  // namespace apg::report
