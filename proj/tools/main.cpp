#include <CLI11.hpp>

#include <iostream>

#include "cli_common.hpp"
#include "duorat/errors.hpp"

int main(int argc, char** argv) {
    CLI::App app{"duorat: exact rational, two-rational and modular-hyperbola toolkit"};
    app.fallthrough();
    app.require_subcommand(1);

    duorat::cli::Context ctx;
    app.add_option("--format", ctx.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "pretty"}))
        ->capture_default_str();
    app.add_option("--out", ctx.out_path, "Write the report to a file instead of stdout");
    app.add_option("--jobs", ctx.jobs, "Worker threads for sweeps (output is identical for any count)")
        ->check(CLI::Range(1, 512))
        ->capture_default_str();
    app.add_option("--seed", ctx.seed, "Seed for sampled inputs")->capture_default_str();

    duorat::cli::register_approx(app, ctx);
    duorat::cli::register_hyperbola(app, ctx);
    duorat::cli::register_sums(app, ctx);
    duorat::cli::register_chars(app, ctx);
    duorat::cli::register_lab(app, ctx);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const duorat::Error& e) {
        if (e.code() == duorat::errc::parse_error) {
            std::cerr << "usage error: " << e.what() << "\n";
            return 2;
        }
        duorat::Json err;
        err["error"]["code"] = duorat::errc_name(e.code());
        err["error"]["message"] = e.what();
        std::cout << err.dump() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
