#include "cli_common.hpp"
#include "duorat/characters.hpp"

namespace duorat::cli {

namespace {

void run_table(const Context& ctx, i64 q, i64 max_print) {
    const CharacterTable table(q);

    Json doc;
    doc["command"] = "chars table";
    doc["q"] = q;
    doc["num_characters"] = table.size();
    doc["angle_denominator"] = table.angle_denominator();
    Json gens = Json::array();
    for (const auto& g : table.generators()) {
        gens.push_back({{"residue", g.residue}, {"order", g.order}, {"prime_power", g.prime_power}});
    }
    doc["generators"] = gens;

    CsvWriter csv({"chi", "exponents"});
    const i64 shown = std::min<i64>(table.size(), max_print);
    Json chars = Json::array();
    for (i64 chi = 0; chi < shown; ++chi) {
        const std::vector<i64> e = table.exponents(chi);
        Json je = Json::array();
        std::string es;
        for (std::size_t i = 0; i < e.size(); ++i) {
            je.push_back(e[i]);
            if (i) es += ' ';
            es += std::to_string(e[i]);
        }
        chars.push_back(je);
        csv.add_row({std::to_string(chi), es});
    }
    doc["characters_shown"] = shown;
    doc["characters"] = chars;
    emit(ctx, doc, csv);
}

void run_ortho(const Context& ctx, i64 q) {
    const double dev = orthogonality_check(q);
    const CharacterTable table(q);
    const double tol = 1e-9 * static_cast<double>(table.size());

    Json doc;
    doc["command"] = "chars ortho";
    doc["q"] = q;
    doc["phi"] = table.size();
    doc["max_deviation"] = real_json(dev);
    doc["tolerance"] = real_json(tol);
    doc["passes"] = dev <= tol;

    CsvWriter csv({"q", "phi", "max_deviation", "tolerance", "passes"});
    csv.add_row({std::to_string(q), std::to_string(table.size()), real_str(dev), real_str(tol),
                 dev <= tol ? "1" : "0"});
    emit(ctx, doc, csv);
}

void run_count(const Context& ctx, i64 q, i64 a, i64 n, i64 b) {
    std::vector<i64> primes;
    for (i64 p : primes_in_range(make_rat(n, 2), make_rat(n, 1))) {
        if (gcd_i64(p, q) == 1) primes.push_back(p);
    }
    const CountComparison cmp = solution_count_via_characters(q, a, primes, b);

    Json doc;
    doc["command"] = "chars count";
    doc["q"] = q;
    doc["a"] = a;
    doc["n"] = n;
    doc["b"] = b;
    doc["p_size"] = static_cast<std::int64_t>(primes.size());
    doc["direct"] = cmp.direct;
    doc["via_characters"] = real_json(cmp.via_characters);
    doc["main_term"] = real_json(cmp.main_term);
    doc["discrepancy"] = real_json(cmp.discrepancy);

    CsvWriter csv({"q", "a", "n", "b", "p_size", "direct", "via_characters", "main_term", "discrepancy"});
    csv.add_row({std::to_string(q), std::to_string(a), std::to_string(n), std::to_string(b),
                 std::to_string(primes.size()), std::to_string(cmp.direct), real_str(cmp.via_characters),
                 real_str(cmp.main_term), real_str(cmp.discrepancy)});
    emit(ctx, doc, csv);
}

void run_pv(const Context& ctx, i64 q, i64 chi) {
    const CharacterTable table(q);

    Json doc;
    doc["command"] = "chars pv";
    doc["q"] = q;
    CsvWriter csv({"q", "chi", "max_partial", "argmax_m", "pv_bound", "glh_shape", "glh_ratio_max"});

    auto add = [&](i64 index, Json& rows) {
        const CharSumReport rep = char_sum_max(table, index);
        rows.push_back({{"chi", index},
                        {"max_partial", real_json(rep.max_partial)},
                        {"argmax_m", rep.argmax_m},
                        {"pv_bound", real_json(rep.pv_bound)},
                        {"glh_shape", real_json(rep.glh_shape)},
                        {"glh_ratio_max", real_json(rep.glh_ratio_max)}});
        csv.add_row({std::to_string(q), std::to_string(index), real_str(rep.max_partial),
                     std::to_string(rep.argmax_m), real_str(rep.pv_bound), real_str(rep.glh_shape),
                     real_str(rep.glh_ratio_max)});
    };

    Json rows = Json::array();
    if (chi >= 0) {
        add(chi, rows);
    } else {
        for (i64 index = 1; index < table.size(); ++index) add(index, rows);
    }
    doc["rows"] = rows;
    emit(ctx, doc, csv);
}

}  // namespace

void register_chars(CLI::App& app, Context& ctx) {
    CLI::App* chars = app.add_subcommand("chars", "Dirichlet characters mod q");
    chars->fallthrough();
    chars->require_subcommand(1);

    {
        CLI::App* cmd = chars->add_subcommand("table", "Group structure and exponent vectors");
        auto q = std::make_shared<i64>();
        auto max_print = std::make_shared<i64>(64);
        cmd->add_option("--q", *q, "Modulus")->required();
        cmd->add_option("--max-print", *max_print, "Cap on listed characters");
        cmd->callback([&ctx, q, max_print]() { run_table(ctx, *q, *max_print); });
    }
    {
        CLI::App* cmd = chars->add_subcommand("ortho", "Orthogonality deviation");
        auto q = std::make_shared<i64>();
        cmd->add_option("--q", *q, "Modulus")->required();
        cmd->callback([&ctx, q]() { run_ortho(ctx, *q); });
    }
    {
        CLI::App* cmd = chars->add_subcommand("count", "Congruence solution count via characters");
        auto q = std::make_shared<i64>(), a = std::make_shared<i64>(), n = std::make_shared<i64>(),
             b = std::make_shared<i64>();
        cmd->add_option("--q", *q, "Modulus")->required();
        cmd->add_option("--a", *a, "Factor, coprime to q")->required();
        cmd->add_option("--n", *n, "Primes from [N/2, N], coprime to q")->required();
        cmd->add_option("--b", *b, "Target window [1, B]")->required();
        cmd->callback([&ctx, q, a, n, b]() { run_count(ctx, *q, *a, *n, *b); });
    }
    {
        CLI::App* cmd = chars->add_subcommand("pv", "Partial character sums vs Polya-Vinogradov");
        auto q = std::make_shared<i64>();
        auto chi = std::make_shared<i64>(-1);
        cmd->add_option("--q", *q, "Modulus")->required();
        cmd->add_option("--chi", *chi, "Character index (default: every non-principal)");
        cmd->callback([&ctx, q, chi]() { run_pv(ctx, *q, *chi); });
    }
}

}  // namespace duorat::cli
