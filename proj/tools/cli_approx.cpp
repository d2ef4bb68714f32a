#include <cmath>

#include "cli_common.hpp"
#include "duorat/duo_approx.hpp"

namespace duorat::cli {

namespace {

Json single_json(const SingleApprox& s) {
    Json j;
    j["a"] = json_int(s.a);
    j["q"] = json_int(s.q);
    j["error"] = rat_json(s.error);
    j["error_real"] = real_json(to_double(s.error));
    return j;
}

Json duo_json(const DuoApprox& d) {
    Json j;
    j["method"] = duo_method_name(d.method);
    j["a1"] = json_int(d.a1);
    j["q1"] = json_int(d.q1);
    j["a2"] = json_int(d.a2);
    j["q2"] = json_int(d.q2);
    j["value"] = rat_json(d.value());
    j["error"] = rat_json(d.error);
    j["error_real"] = real_json(to_double(d.error));
    return j;
}

void run_single(const Context& ctx, const std::string& alpha_text, std::int64_t n, bool best,
                bool list_convergents) {
    const Rat alpha = parse_rational(alpha_text);
    const Int nz(static_cast<long>(n));
    const SingleApprox s = best ? best_single(alpha, nz) : dirichlet_approx(alpha, nz);

    Json doc;
    doc["command"] = "approx single";
    doc["alpha"] = rat_json(alpha);
    doc["n"] = n;
    doc["mode"] = best ? "best" : "dirichlet";
    doc["result"] = single_json(s);
    doc["dirichlet_bound"] = rat_json(make_rat(Int(1), s.q * nz));
    if (list_convergents) {
        Json list = Json::array();
        for (const SingleApprox& c : convergents(alpha)) list.push_back(single_json(c));
        doc["convergents"] = list;
    }

    CsvWriter csv({"alpha", "n", "mode", "a", "q", "error", "error_real"});
    csv.add_row({rat_str(alpha), std::to_string(n), best ? "best" : "dirichlet", s.a.get_str(),
                 s.q.get_str(), rat_str(s.error), real_str(to_double(s.error))});
    emit(ctx, doc, csv);
}

void run_duo(const Context& ctx, const std::string& alpha_text, std::int64_t n, std::int64_t r_max,
             bool distinct_primes, bool oracle, double eps) {
    const Rat alpha = parse_rational(alpha_text);
    const Int nz(static_cast<long>(n));

    Json doc;
    doc["command"] = "approx duo";
    doc["alpha"] = rat_json(alpha);
    doc["n"] = n;

    DuoApprox result{Int(0), Int(1), Int(0), Int(1), Rat(0), DuoMethod::trivial};
    std::optional<ReductionTrace> trace;
    if (oracle) {
        result = brute_best_duo(alpha, nz);
        doc["mode"] = "oracle";
    } else {
        Int r = r_max > 0 ? Int(static_cast<long>(r_max))
                          : default_r_max(dirichlet_approx(alpha, nz * nz).q, nz);
        const DuoReductionResult red = duo_from_reduction(alpha, nz, r, distinct_primes);
        result = red.result;
        trace = red.trace;
        doc["mode"] = distinct_primes ? "reduction-distinct-primes" : "reduction";
        doc["r_max"] = json_int(r);
    }
    doc["result"] = duo_json(result);
    if (trace) {
        Json t;
        t["single"] = single_json(trace->single);
        t["r"] = json_int(trace->r);
        t["b"] = json_int(trace->b);
        t["q1"] = json_int(trace->q1);
        t["q2"] = json_int(trace->q2);
        doc["trace"] = t;
    }
    {
        // Trend ratio error * q * N^(2 - eps) against the single approximant's
        // denominator; reported only, never asserted (the constant is open).
        const SingleApprox single = dirichlet_approx(alpha, nz * nz);
        const double ratio = to_double(result.error) * to_double(single.q) *
                             std::pow(static_cast<double>(n), 2.0 - eps);
        doc["quality"] = {{"q_single", json_int(single.q)},
                          {"eps", real_json(eps)},
                          {"ratio", real_json(ratio)}};
    }

    CsvWriter csv({"alpha", "n", "method", "a1", "q1", "a2", "q2", "error", "error_real"});
    csv.add_row({rat_str(alpha), std::to_string(n), duo_method_name(result.method), result.a1.get_str(),
                 result.q1.get_str(), result.a2.get_str(), result.q2.get_str(), rat_str(result.error),
                 real_str(to_double(result.error))});
    emit(ctx, doc, csv);
}

}  // namespace

void register_approx(CLI::App& app, Context& ctx) {
    CLI::App* approx = app.add_subcommand("approx", "Rational approximation");
    approx->fallthrough();
    approx->require_subcommand(1);

    {
        CLI::App* cmd = approx->add_subcommand("single", "Single-rational approximation");
        auto alpha = std::make_shared<std::string>();
        auto n = std::make_shared<std::int64_t>(100);
        auto best = std::make_shared<bool>(false);
        auto conv = std::make_shared<bool>(false);
        cmd->add_option("--alpha", *alpha, "Target value, p/q or decimal")->required();
        cmd->add_option("--n", *n, "Denominator bound N")->required()->check(CLI::PositiveNumber);
        cmd->add_flag("--best", *best, "Exhaustive best approximation instead of the Dirichlet pair");
        cmd->add_flag("--convergents", *conv, "Include the convergent list");
        cmd->callback([&ctx, alpha, n, best, conv]() { run_single(ctx, *alpha, *n, *best, *conv); });
    }
    {
        CLI::App* cmd = approx->add_subcommand("duo", "Two-rational approximation");
        auto alpha = std::make_shared<std::string>();
        auto n = std::make_shared<std::int64_t>(100);
        auto r_max = std::make_shared<std::int64_t>(0);
        auto distinct = std::make_shared<bool>(false);
        auto oracle = std::make_shared<bool>(false);
        auto eps = std::make_shared<double>(0.1);
        cmd->add_option("--alpha", *alpha, "Target value, p/q or decimal")->required();
        cmd->add_option("--n", *n, "Denominator bound N")->required()->check(CLI::PositiveNumber);
        cmd->add_option("--r-max", *r_max, "Window for the congruence scan (default: ceil(q/N^2) N^(1/10))");
        cmd->add_flag("--distinct-primes", *distinct, "Restrict to distinct prime denominators");
        cmd->add_flag("--oracle", *oracle, "Exhaustive oracle over all reachable denominators");
        cmd->add_option("--eps", *eps, "Epsilon for the reported quality ratio error q N^(2-eps)");
        cmd->callback([&ctx, alpha, n, r_max, distinct, oracle, eps]() {
            run_duo(ctx, *alpha, *n, *r_max, *distinct, *oracle, *eps);
        });
    }
}

}  // namespace duorat::cli
