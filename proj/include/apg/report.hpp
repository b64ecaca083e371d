#pragma once

#include <fstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "apg/checkers.hpp"
#include "apg/numeric.hpp"

namespace apg::report {

using Json = nlohmann::ordered_json;

struct Record {
    std::string suite;
    std::string name;
    Json inputs = Json::object();
    double lhs = 0;
    double rhs = 0;
    double margin = 0;
    bool pass = false;
    std::string kind = "bound";
};

Record from_eval(const std::string& suite, const Json& inputs, const BoundEval& e);
// lhs is the number of failures; passes iff there are none.
Record from_check(const std::string& suite, const checkers::CheckReport& r);

// Records of kind "info" never fail a run.
bool passed(const std::vector<Record>& records);

Json to_json(const Record& r);
Record from_json(const Json& j);

// One JSON object per line; the first line is a header carrying the timestamp.
class Writer {
public:
    explicit Writer(const std::string& path);
    void write(const Record& r);
    bool is_open() const { return out_.is_open(); }

private:
    std::ofstream out_;
};

std::vector<Record> read(const std::string& path);

}  // namespace apg::report
