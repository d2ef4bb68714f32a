#include "duorat/report.hpp"

#include <cstdio>
#include <stdexcept>

namespace duorat {

std::string real_str(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

Json json_int(const Int& v) {
    if (v.fits_slong_p()) return static_cast<std::int64_t>(v.get_si());
    return v.get_str();
}

CsvWriter::CsvWriter(std::vector<std::string> columns) : columns_(std::move(columns)) {}

void CsvWriter::add_row(const std::vector<std::string>& fields) {
    if (fields.size() != columns_.size()) throw std::logic_error("csv row width mismatch");
    rows_.push_back(fields);
}

namespace {

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += '"';
    return out;
}

}  // namespace

std::string CsvWriter::str() const {
    std::string out;
    for (std::size_t i = 0; i < columns_.size(); ++i) {
        if (i) out += ',';
        out += csv_escape(columns_[i]);
    }
    out += '\n';
    for (const auto& row : rows_) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += csv_escape(row[i]);
        }
        out += '\n';
    }
    return out;
}

}  // namespace duorat
