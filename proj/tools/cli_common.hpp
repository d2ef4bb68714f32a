#pragma once

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "duorat/report.hpp"

namespace duorat::cli {

struct Context {
    std::string format = "json";  // json | csv | pretty
    std::string out_path;         // empty: stdout
    int jobs = 1;
    std::uint64_t seed = 1;
};

// Every command renders one JSON document; CSV is a per-command projection.
inline void emit(const Context& ctx, const Json& doc, const CsvWriter& csv) {
    std::string text;
    if (ctx.format == "csv") text = csv.str();
    else if (ctx.format == "pretty") text = doc.dump(2) + "\n";
    else text = doc.dump() + "\n";

    if (ctx.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(ctx.out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + ctx.out_path);
    out << text;
}

inline Json real_json(double x) {
    // Round through the 12-significant-digit representation so dumps stay
    // within the documented precision.
    return Json(std::stod(real_str(x)));
}

inline Json rat_json(const Rat& r) { return Json(rat_str(r)); }

void register_approx(CLI::App& app, Context& ctx);
void register_hyperbola(CLI::App& app, Context& ctx);
void register_sums(CLI::App& app, Context& ctx);
void register_chars(CLI::App& app, Context& ctx);
void register_lab(CLI::App& app, Context& ctx);

}  // namespace duorat::cli
