#include <cmath>

#include "cli_common.hpp"
#include "duorat/lab.hpp"

namespace duorat::cli {

namespace {

void run_conj0(const Context& ctx, const std::string& alpha_text, i64 samples, i64 n, double beta,
               i64 max_den) {
    Json doc;
    doc["command"] = "lab conj0";
    doc["n"] = n;
    doc["beta"] = real_json(beta);

    CsvWriter csv({"alpha", "n", "beta", "error", "q1", "q2", "ratio"});
    Json rows = Json::array();
    const Int nz(static_cast<long>(n));

    auto add = [&](const Rat& alpha) {
        const Conj0Result r = conj0_quality(alpha, nz, beta);
        rows.push_back({{"alpha", rat_str(alpha)},
                        {"error", rat_str(r.best.error)},
                        {"q1", json_int(r.best.q1)},
                        {"q2", json_int(r.best.q2)},
                        {"ratio", real_json(r.ratio)}});
        csv.add_row({rat_str(alpha), std::to_string(n), real_str(beta), rat_str(r.best.error),
                     r.best.q1.get_str(), r.best.q2.get_str(), real_str(r.ratio)});
        return r.ratio;
    };

    if (!alpha_text.empty()) {
        add(parse_rational(alpha_text));
    } else {
        doc["seed"] = ctx.seed;
        doc["samples"] = samples;
        doc["max_den"] = max_den;
        AlphaSampler sampler(ctx.seed);
        double worst = 0.0, least = 0.0, sum = 0.0;
        for (i64 i = 0; i < samples; ++i) {
            const double ratio = add(sampler.next(max_den));
            worst = std::max(worst, ratio);
            least = i == 0 ? ratio : std::min(least, ratio);
            sum += ratio;
        }
        doc["min_ratio"] = real_json(least);
        doc["max_ratio"] = real_json(worst);
        doc["mean_ratio"] = real_json(samples > 0 ? sum / static_cast<double>(samples) : 0.0);
    }
    doc["rows"] = rows;
    emit(ctx, doc, csv);
}

void run_conj2_full(const Context& ctx, i64 q_lo, i64 q_hi) {
    if (q_lo < 2) q_lo = 2;
    Json doc;
    doc["command"] = "lab conj2";
    doc["q_lo"] = q_lo;
    doc["q_hi"] = q_hi;
    doc["full"] = true;
    CsvWriter csv({"q", "c", "max", "exponent"});
    Json rows = Json::array();
    for (i64 q = q_lo; q <= q_hi; ++q) {
        for (const auto& [c, level] : conj2_levels(q)) {
            const double expo = level <= 1 ? 0.0
                                           : std::log(static_cast<double>(level)) /
                                                 std::log(static_cast<double>(q));
            rows.push_back({{"q", q}, {"c", c}, {"max", level}, {"exponent", real_json(expo)}});
            csv.add_row({std::to_string(q), std::to_string(c), std::to_string(level), real_str(expo)});
        }
    }
    doc["rows"] = rows;
    emit(ctx, doc, csv);
}

void run_conj2(const Context& ctx, i64 q_lo, i64 q_hi) {
    const Conj2Report rep = conj2_sweep(q_lo, q_hi, ctx.jobs);

    Json doc;
    doc["command"] = "lab conj2";
    doc["q_lo"] = q_lo;
    doc["q_hi"] = q_hi;
    CsvWriter csv({"q", "worst_c", "x", "y", "max", "exponent"});
    Json rows = Json::array();
    for (const Conj2Row& row : rep.rows) {
        rows.push_back({{"q", row.q},
                        {"worst_c", row.worst_c},
                        {"x", row.x},
                        {"y", row.y},
                        {"max", row.max_xy},
                        {"exponent", real_json(row.exponent)}});
        csv.add_row({std::to_string(row.q), std::to_string(row.worst_c), std::to_string(row.x),
                     std::to_string(row.y), std::to_string(row.max_xy), real_str(row.exponent)});
    }
    doc["rows"] = rows;
    doc["summary"] = {{"min_exponent", real_json(rep.min_exponent)},
                      {"max_exponent", real_json(rep.max_exponent)},
                      {"mean_exponent", real_json(rep.mean_exponent)}};
    emit(ctx, doc, csv);
}

void run_conj3(const Context& ctx, i64 q, i64 c, const std::string& theta_text,
               const std::string& c_theta_text, i64 n) {
    const Rat theta = parse_rational(theta_text);
    const Rat c_theta = parse_rational(c_theta_text);
    const Conj3Result r = conj3_check(q, c, theta, c_theta, n);

    Json doc;
    doc["command"] = "lab conj3";
    doc["q"] = q;
    doc["c"] = c;
    doc["theta"] = rat_str(theta);
    doc["c_theta"] = rat_str(c_theta);
    doc["n"] = n;
    doc["box"] = {r.box_lo, r.box_hi};
    doc["holds"] = r.holds;
    CsvWriter csv({"q", "c", "n", "box_lo", "box_hi", "holds", "x", "y"});
    if (r.witness) {
        doc["witness"] = {r.witness->x, r.witness->y};
        csv.add_row({std::to_string(q), std::to_string(c), std::to_string(n), std::to_string(r.box_lo),
                     std::to_string(r.box_hi), "1", std::to_string(r.witness->x),
                     std::to_string(r.witness->y)});
    } else {
        csv.add_row({std::to_string(q), std::to_string(c), std::to_string(n), std::to_string(r.box_lo),
                     std::to_string(r.box_hi), "0", "", ""});
    }
    emit(ctx, doc, csv);
}

void run_thm4(const Context& ctx, i64 n, const std::string& eps_text, i64 q_cap) {
    const Rat eps = parse_rational(eps_text);
    const Thm4Result r = thm4_bad_measure(n, eps, q_cap, ctx.jobs);

    Json doc;
    doc["command"] = "lab thm4";
    doc["n"] = n;
    doc["eps"] = rat_str(eps);
    doc["q_cap"] = q_cap;
    CsvWriter csv({"q", "phi", "bad_count"});
    Json rows = Json::array();
    for (const Thm4Row& row : r.rows) {
        rows.push_back({{"q", row.q}, {"phi", row.phi}, {"bad_count", row.bad_count}});
        csv.add_row({std::to_string(row.q), std::to_string(row.phi), std::to_string(row.bad_count)});
    }
    doc["rows"] = rows;
    Json bad = Json::array();
    for (const auto& [a, q] : r.bad_pairs) bad.push_back({a, q});
    doc["bad_pairs"] = bad;
    doc["bad_pair_count"] = static_cast<std::int64_t>(r.bad_pairs.size());
    doc["bad_weight"] = rat_json(r.bad_weight);
    doc["bad_measure"] = real_json(r.bad_measure);
    doc["reference"] = real_json(r.reference);
    emit(ctx, doc, csv);
}

}  // namespace

void register_lab(CLI::App& app, Context& ctx) {
    CLI::App* lab = app.add_subcommand("lab", "Conjecture sweeps and measurements");
    lab->fallthrough();
    lab->require_subcommand(1);

    {
        CLI::App* cmd = lab->add_subcommand("conj0", "Oracle error against 1/((q1 q2)^beta N^(2-beta))");
        auto alpha = std::make_shared<std::string>();
        auto samples = std::make_shared<i64>(10);
        auto n = std::make_shared<i64>();
        auto beta = std::make_shared<double>(1.0);
        auto max_den = std::make_shared<i64>(1'000'000);
        cmd->add_option("--alpha", *alpha, "Explicit target (otherwise sampled)");
        cmd->add_option("--samples", *samples, "Number of sampled targets");
        cmd->add_option("--n", *n, "Denominator bound N")->required();
        cmd->add_option("--beta", *beta, "Interpolation exponent in [0, 1]");
        cmd->add_option("--max-den", *max_den, "Sampler denominator cap");
        cmd->callback([&ctx, alpha, samples, n, beta, max_den]() {
            run_conj0(ctx, *alpha, *samples, *n, *beta, *max_den);
        });
    }
    {
        CLI::App* cmd = lab->add_subcommand("conj2", "Worst smallest-max exponent per modulus");
        auto q_lo = std::make_shared<i64>(), q_hi = std::make_shared<i64>();
        auto full = std::make_shared<bool>(false);
        cmd->add_option("--q-lo", *q_lo, "First modulus")->required();
        cmd->add_option("--q-hi", *q_hi, "Last modulus")->required();
        cmd->add_flag("--full", *full, "One row per (q, c) instead of the per-q worst");
        cmd->callback([&ctx, q_lo, q_hi, full]() {
            if (*full) run_conj2_full(ctx, *q_lo, *q_hi);
            else run_conj2(ctx, *q_lo, *q_hi);
        });
    }
    {
        CLI::App* cmd = lab->add_subcommand("conj3", "Coprime solutions in [C N, 2 C N]^2");
        auto q = std::make_shared<i64>(), c = std::make_shared<i64>(), n = std::make_shared<i64>();
        auto theta = std::make_shared<std::string>("1");
        auto c_theta = std::make_shared<std::string>("1");
        cmd->add_option("--q", *q, "Modulus")->required();
        cmd->add_option("--c", *c, "Residue, coprime to q")->required();
        cmd->add_option("--theta", *theta, "Exponent in (1/2, 1]; N >= q^theta is required");
        cmd->add_option("--c-theta", *c_theta, "Box constant C");
        cmd->add_option("--n", *n, "Scale N")->required();
        cmd->callback([&ctx, q, c, theta, c_theta, n]() { run_conj3(ctx, *q, *c, *theta, *c_theta, *n); });
    }
    {
        CLI::App* cmd = lab->add_subcommand("thm4", "Bad-interval measure sum");
        auto n = std::make_shared<i64>();
        auto eps = std::make_shared<std::string>("0.5");
        auto q_cap = std::make_shared<i64>();
        cmd->add_option("--n", *n, "Scale N")->required();
        cmd->add_option("--eps", *eps, "Epsilon (rational or decimal)");
        cmd->add_option("--q-cap", *q_cap, "Largest modulus, at most N^(2-eps)")->required();
        cmd->callback([&ctx, n, eps, q_cap]() { run_thm4(ctx, *n, *eps, *q_cap); });
    }
}

}  // namespace duorat::cli
