#include "cli_common.hpp"
#include "duorat/harmonic_sums.hpp"

namespace duorat::cli {

namespace {

void run_et(const Context& ctx, const std::string& points_text, i64 l) {
    std::vector<UnitPoint> points;
    std::string token;
    for (char c : points_text + ",") {
        if (c == ',') {
            if (!token.empty()) points.emplace_back(parse_rational(token));
            token.clear();
        } else {
            token += c;
        }
    }
    const EtReport rep = et_inequality(points, l);

    Json doc;
    doc["command"] = "sums et";
    Json pts = Json::array();
    for (const UnitPoint& p : points) pts.push_back(rat_str(p.value));
    doc["points"] = pts;
    doc["j"] = static_cast<std::int64_t>(points.size());
    doc["l"] = l;
    doc["hypothesis_ok"] = rep.hypothesis_ok;
    doc["lhs"] = real_json(rep.lhs);
    doc["rhs"] = real_json(rep.rhs);
    doc["holds"] = rep.lhs > rep.rhs;

    CsvWriter csv({"j", "l", "hypothesis_ok", "lhs", "rhs"});
    csv.add_row({std::to_string(points.size()), std::to_string(l), rep.hypothesis_ok ? "1" : "0",
                 real_str(rep.lhs), real_str(rep.rhs)});
    emit(ctx, doc, csv);
}

void run_s1s2(const Context& ctx, i64 q, i64 a, i64 n, i64 l, double phi, double eps) {
    const i64 l_eff = l > 0 ? l : default_l(q, n, phi, eps);
    const ExpSumReport rep = s_sums_thm6(q, a, n, l_eff);

    Json doc;
    doc["command"] = "sums s1s2";
    doc["q"] = q;
    doc["a"] = a;
    doc["n"] = n;
    doc["l"] = rep.l;
    doc["p_size"] = rep.p_size;
    doc["s1"] = real_json(rep.s1);
    doc["s2"] = real_json(rep.s2);
    doc["threshold"] = real_json(rep.threshold);
    doc["passes"] = rep.passes;

    CsvWriter csv({"q", "a", "n", "l", "p_size", "s1", "s2", "threshold", "passes"});
    csv.add_row({std::to_string(q), std::to_string(a), std::to_string(n), std::to_string(rep.l),
                 std::to_string(rep.p_size), real_str(rep.s1), real_str(rep.s2), real_str(rep.threshold),
                 rep.passes ? "1" : "0"});
    emit(ctx, doc, csv);
}

void run_drprofile(const Context& ctx, i64 n, i64 l) {
    const std::vector<i64> primes = primes_in_range(make_rat(n, 2), make_rat(n, 1));
    const DrProfile prof = d_r_profile(l, primes);

    Json doc;
    doc["command"] = "sums drprofile";
    doc["n"] = n;
    doc["l"] = l;
    doc["p_size"] = static_cast<std::int64_t>(primes.size());
    doc["max_d"] = prof.max_d;
    doc["argmax_r"] = prof.argmax_r;
    doc["nonzero"] = static_cast<std::int64_t>(prof.counts.size());

    CsvWriter csv({"r", "d_r"});
    Json rows = Json::array();
    for (const auto& [r, d] : prof.counts) {
        rows.push_back({r, d});
        csv.add_row({std::to_string(r), std::to_string(d)});
    }
    doc["profile"] = rows;
    emit(ctx, doc, csv);
}

void run_thm7(const Context& ctx, i64 q, i64 n, i64 l) {
    const S1BoundReport rep = s1_bound_thm7(q, n, l);

    Json doc;
    doc["command"] = "sums thm7";
    doc["q"] = q;
    doc["n"] = n;
    doc["l"] = l;
    doc["t_exact"] = real_json(rep.t_exact);
    doc["cap"] = real_json(rep.cap);

    CsvWriter csv({"q", "n", "l", "t_exact", "cap"});
    csv.add_row({std::to_string(q), std::to_string(n), std::to_string(l), real_str(rep.t_exact),
                 real_str(rep.cap)});
    emit(ctx, doc, csv);
}

}  // namespace

void register_sums(CLI::App& app, Context& ctx) {
    CLI::App* sums = app.add_subcommand("sums", "Exponential-sum machinery");
    sums->fallthrough();
    sums->require_subcommand(1);

    {
        CLI::App* cmd = sums->add_subcommand("et", "Erdos-Turan harmonic mass check");
        auto points = std::make_shared<std::string>();
        auto l = std::make_shared<i64>();
        cmd->add_option("--points", *points, "Comma-separated rationals, e.g. 1/2,1/4")->required();
        cmd->add_option("--l", *l, "Number of harmonics L")->required();
        cmd->callback([&ctx, points, l]() { run_et(ctx, *points, *l); });
    }
    {
        CLI::App* cmd = sums->add_subcommand("s1s2", "S1 + S2 against |P|^2/7");
        auto q = std::make_shared<i64>(), a = std::make_shared<i64>(), n = std::make_shared<i64>();
        auto l = std::make_shared<i64>(0);
        auto phi = std::make_shared<double>(1.25), eps = std::make_shared<double>(0.1);
        cmd->add_option("--q", *q, "Modulus")->required();
        cmd->add_option("--a", *a, "Numerator, coprime to q")->required();
        cmd->add_option("--n", *n, "Primes from [N/2, N]")->required();
        cmd->add_option("--l", *l, "Harmonics L (default: floor(q N^(phi-2-eps)) + 1)");
        cmd->add_option("--phi", *phi, "Exponent parameter for the default L");
        cmd->add_option("--eps", *eps, "Epsilon for the default L");
        cmd->callback([&ctx, q, a, n, l, phi, eps]() { run_s1s2(ctx, *q, *a, *n, *l, *phi, *eps); });
    }
    {
        CLI::App* cmd = sums->add_subcommand("drprofile", "Multiplicity profile d_r = #{l p = r}");
        auto n = std::make_shared<i64>(), l = std::make_shared<i64>();
        cmd->add_option("--n", *n, "Primes from [N/2, N]")->required();
        cmd->add_option("--l", *l, "Range of l")->required();
        cmd->callback([&ctx, n, l]() { run_drprofile(ctx, *n, *l); });
    }
    {
        CLI::App* cmd = sums->add_subcommand("thm7", "Direct T vs the L N d(q) log q cap");
        auto q = std::make_shared<i64>(), n = std::make_shared<i64>(), l = std::make_shared<i64>();
        cmd->add_option("--q", *q, "Modulus")->required();
        cmd->add_option("--n", *n, "Integer window [N/2, N]")->required();
        cmd->add_option("--l", *l, "Scan length L")->required();
        cmd->callback([&ctx, q, n, l]() { run_thm7(ctx, *q, *n, *l); });
    }
}

}  // namespace duorat::cli
