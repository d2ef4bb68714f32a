#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "duorat/rational.hpp"

namespace duorat {

// Insertion-ordered JSON keeps output layout fixed across runs.
using Json = nlohmann::ordered_json;

// Reals are always printed with 12 significant digits.
std::string real_str(double x);

// Integers that fit in 64 bits are emitted as JSON numbers, larger ones as
// decimal strings.
Json json_int(const Int& v);

// Minimal CSV table; fields containing separators or quotes get quoted.
class CsvWriter {
public:
    explicit CsvWriter(std::vector<std::string> columns);

    void add_row(const std::vector<std::string>& fields);
    std::string str() const;

private:
    std::vector<std::string> columns_;
    std::vector<std::vector<std::string>> rows_;
};

}  // namespace duorat
