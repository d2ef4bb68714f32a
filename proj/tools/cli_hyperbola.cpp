#include "cli_common.hpp"
#include "duorat/hyperbola.hpp"

namespace duorat::cli {

namespace {

std::vector<i64> parse_csv_ints(const std::string& text, std::size_t expect, const std::string& what) {
    std::vector<i64> out;
    std::string token;
    for (char c : text + ",") {
        if (c == ',') {
            if (token.empty()) throw_error(errc::parse_error, "bad " + what + ": '" + text + "'");
            out.push_back(std::stoll(token));
            token.clear();
        } else {
            token += c;
        }
    }
    if (out.size() != expect) {
        throw_error(errc::parse_error, what + " needs " + std::to_string(expect) + " comma-separated integers");
    }
    return out;
}

void run_solve(const Context& ctx, i64 q, i64 c, const std::string& box_text, bool coprime) {
    const auto b = parse_csv_ints(box_text, 4, "--box");
    const HyperbolaInstance inst(q, c);
    const Box box(b[0], b[1], b[2], b[3]);
    const auto sols = solutions_in_box(inst, box, coprime);

    Json doc;
    doc["command"] = "hyperbola solve";
    doc["q"] = q;
    doc["c"] = c;
    doc["box"] = {b[0], b[1], b[2], b[3]};
    doc["coprime_xy"] = coprime;
    doc["count"] = static_cast<std::int64_t>(sols.size());
    Json list = Json::array();
    for (const auto& s : sols) list.push_back({s.x, s.y});
    doc["solutions"] = list;

    CsvWriter csv({"q", "c", "x", "y"});
    for (const auto& s : sols) {
        csv.add_row({std::to_string(q), std::to_string(c), std::to_string(s.x), std::to_string(s.y)});
    }
    emit(ctx, doc, csv);
}

void run_min(const Context& ctx, i64 q, i64 c) {
    const HyperbolaInstance inst(q, c);
    const MinMaxSolution m = smallest_max_solution(inst);

    Json doc;
    doc["command"] = "hyperbola min";
    doc["q"] = q;
    doc["c"] = c;
    doc["x"] = m.sol.x;
    doc["y"] = m.sol.y;
    doc["max"] = std::max(m.sol.x, m.sol.y);
    doc["exponent"] = real_json(m.exponent);

    CsvWriter csv({"q", "c", "x", "y", "max", "exponent"});
    csv.add_row({std::to_string(q), std::to_string(c), std::to_string(m.sol.x), std::to_string(m.sol.y),
                 std::to_string(std::max(m.sol.x, m.sol.y)), real_str(m.exponent)});
    emit(ctx, doc, csv);
}

void run_lift(const Context& ctx, i64 q, i64 c, const std::string& box_text, i64 k_max) {
    const auto b = parse_csv_ints(box_text, 4, "--box");
    const HyperbolaInstance inst(q, c);
    const Box box(b[0], b[1], b[2], b[3]);
    const auto hit = lift_and_factor_search(inst, box, k_max);

    Json doc;
    doc["command"] = "hyperbola lift";
    doc["q"] = q;
    doc["c"] = c;
    doc["box"] = {b[0], b[1], b[2], b[3]};
    doc["k_max"] = k_max;
    doc["found"] = hit.has_value();
    CsvWriter csv({"q", "c", "found", "x", "y", "k"});
    if (hit) {
        doc["x"] = hit->x;
        doc["y"] = hit->y;
        doc["k"] = (hit->x * hit->y - c) / q;
        csv.add_row({std::to_string(q), std::to_string(c), "1", std::to_string(hit->x),
                     std::to_string(hit->y), std::to_string((hit->x * hit->y - c) / q)});
    } else {
        csv.add_row({std::to_string(q), std::to_string(c), "0", "", "", ""});
    }
    emit(ctx, doc, csv);
}

void run_coverage(const Context& ctx, i64 m, const std::string& xr_text, const std::string& yr_text,
                  bool coprime) {
    const auto xr = parse_csv_ints(xr_text, 2, "--x-range");
    const auto yr = parse_csv_ints(yr_text, 2, "--y-range");
    const CoverageReport rep = coverage_count(m, xr[0], xr[1], yr[0], yr[1], coprime);

    Json doc;
    doc["command"] = "hyperbola coverage";
    doc["m"] = m;
    doc["x_range"] = {xr[0], xr[1]};
    doc["y_range"] = {yr[0], yr[1]};
    doc["coprime_xy"] = coprime;
    doc["covered"] = rep.covered;
    doc["fraction"] = real_json(rep.fraction);

    CsvWriter csv({"m", "x_lo", "x_hi", "y_lo", "y_hi", "coprime", "covered", "fraction"});
    csv.add_row({std::to_string(m), std::to_string(xr[0]), std::to_string(xr[1]), std::to_string(yr[0]),
                 std::to_string(yr[1]), coprime ? "1" : "0", std::to_string(rep.covered),
                 real_str(rep.fraction)});
    emit(ctx, doc, csv);
}

void run_classify(const Context& ctx, i64 a, i64 q, i64 n) {
    const IntervalClassification cls = classify_interval(a, q, n);

    Json doc;
    doc["command"] = "hyperbola classify";
    doc["a"] = a;
    doc["q"] = q;
    doc["n"] = n;
    doc["class"] = cls.cls == IntervalClass::good ? "good" : "bad";
    CsvWriter csv({"a", "q", "n", "class", "q1", "q2"});
    if (cls.witness) {
        doc["witness"] = {cls.witness->x, cls.witness->y};
        csv.add_row({std::to_string(a), std::to_string(q), std::to_string(n), "good",
                     std::to_string(cls.witness->x), std::to_string(cls.witness->y)});
    } else {
        csv.add_row({std::to_string(a), std::to_string(q), std::to_string(n), "bad", "", ""});
    }
    emit(ctx, doc, csv);
}

}  // namespace

void register_hyperbola(CLI::App& app, Context& ctx) {
    CLI::App* hyp = app.add_subcommand("hyperbola", "The congruence x*y = c (mod q)");
    hyp->fallthrough();
    hyp->require_subcommand(1);

    {
        CLI::App* cmd = hyp->add_subcommand("solve", "Enumerate solutions in a box");
        auto q = std::make_shared<i64>(), c = std::make_shared<i64>();
        auto box = std::make_shared<std::string>();
        auto coprime = std::make_shared<bool>(false);
        cmd->add_option("--q", *q, "Modulus")->required();
        cmd->add_option("--c", *c, "Residue, coprime to q")->required();
        cmd->add_option("--box", *box, "xlo,xhi,ylo,yhi")->required();
        cmd->add_flag("--coprime", *coprime, "Require gcd(x, y) = 1");
        cmd->callback([&ctx, q, c, box, coprime]() { run_solve(ctx, *q, *c, *box, *coprime); });
    }
    {
        CLI::App* cmd = hyp->add_subcommand("min", "Solution minimizing max(x, y)");
        auto q = std::make_shared<i64>(), c = std::make_shared<i64>();
        cmd->add_option("--q", *q, "Modulus")->required();
        cmd->add_option("--c", *c, "Residue, coprime to q")->required();
        cmd->callback([&ctx, q, c]() { run_min(ctx, *q, *c); });
    }
    {
        CLI::App* cmd = hyp->add_subcommand("lift", "Search lifts x*y = c + k*q by factoring");
        auto q = std::make_shared<i64>(), c = std::make_shared<i64>(), k = std::make_shared<i64>(0);
        auto box = std::make_shared<std::string>();
        cmd->add_option("--q", *q, "Modulus")->required();
        cmd->add_option("--c", *c, "Residue, coprime to q")->required();
        cmd->add_option("--box", *box, "xlo,xhi,ylo,yhi")->required();
        cmd->add_option("--k-max", *k, "Largest lift index")->required();
        cmd->callback([&ctx, q, c, box, k]() { run_lift(ctx, *q, *c, *box, *k); });
    }
    {
        CLI::App* cmd = hyp->add_subcommand("coverage", "Distinct residues x*y mod m over windows");
        auto m = std::make_shared<i64>();
        auto xr = std::make_shared<std::string>(), yr = std::make_shared<std::string>();
        auto coprime = std::make_shared<bool>(false);
        cmd->add_option("--m", *m, "Modulus")->required();
        cmd->add_option("--x-range", *xr, "lo,hi")->required();
        cmd->add_option("--y-range", *yr, "lo,hi (any shifted window)")->required();
        cmd->add_flag("--coprime", *coprime, "Require gcd(x, y) = 1");
        cmd->callback([&ctx, m, xr, yr, coprime]() { run_coverage(ctx, *m, *xr, *yr, *coprime); });
    }
    {
        CLI::App* cmd = hyp->add_subcommand("classify", "Good/bad Dirichlet interval I_{a,q}");
        auto a = std::make_shared<i64>(), q = std::make_shared<i64>(), n = std::make_shared<i64>();
        cmd->add_option("--a", *a, "Numerator, coprime to q")->required();
        cmd->add_option("--q", *q, "Denominator")->required();
        cmd->add_option("--n", *n, "Box bound N, pairs from [ceil(N/4), N]")->required();
        cmd->callback([&ctx, a, q, n]() { run_classify(ctx, *a, *q, *n); });
    }
}

}  // namespace duorat::cli
