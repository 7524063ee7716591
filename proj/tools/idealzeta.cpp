// idealzeta: count ideals of Z[t]/(f) and check closed forms against oracles.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "idealzeta/errors.hpp"
#include "idealzeta/report.hpp"

using namespace idealzeta;

namespace {

struct Subcommand {
    char const* name;
    char const* help;
};

constexpr Subcommand subcommands[] = {
    {"count", "ideal counts a(k) for k <= max-index by HNF enumeration"},
    {"series", "coefficients of zeta(s) zeta(2s-1) ... zeta(ns-(n-1)) for f = t^n"},
    {"local", "local coefficients a(p^e), with the closed form when f = t^n"},
    {"volume", "exact p-adic volume for one exponent tuple, beside applicable closed forms"},
    {"compare", "oracle counts vs volume reconstruction vs closed forms"},
    {"asymptote", "partial sums against c B (log B)^(n-1) at decade checkpoints"},
    {"lemma-check", "verify the chain-sum identity for 2 <= k <= n"},
};

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Ideal zeta functions of Z[t]/(f): exact counts, volumes and closed forms"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string format = "json";
    std::string output;

    for (auto const& sc : subcommands) {
        CLI::App* sub = app.add_subcommand(sc.name, sc.help);
        sub->add_option("--poly", cfg.poly, "monic polynomial in t, e.g. \"t^2*(t-3)\"")->envname("IDEALZETA_POLY");
        sub->add_option("--primes", cfg.primes, "comma-separated primes")
            ->delimiter(',')
            ->envname("IDEALZETA_PRIMES");
        sub->add_option("--max-index", cfg.max_index, "largest index k (B)")->envname("IDEALZETA_MAX_INDEX");
        sub->add_option("--max-exponent", cfg.max_exponent, "largest exponent e (E)")
            ->envname("IDEALZETA_MAX_EXPONENT");
        sub->add_option("--jobs", cfg.jobs, "worker threads")->envname("IDEALZETA_JOBS");
        sub->add_option("--format", format, "json | csv | text")->envname("IDEALZETA_FORMAT");
        sub->add_option("--resource-cap", cfg.resource_cap, "enumeration ceiling per index")
            ->envname("IDEALZETA_RESOURCE_CAP");
        sub->add_flag("--paper-mode", cfg.paper_mode, "include quarantined published closed forms")
            ->envname("IDEALZETA_PAPER_MODE");
        sub->add_option("--output", output, "write the report to this file instead of stdout");
        if (std::string(sc.name) == "volume")
            sub->add_option("--exponents", cfg.exponents, "comma-separated b_1,...,b_n")->delimiter(',')->required();
        if (std::string(sc.name) == "lemma-check") {
            sub->add_option("--n", cfg.lemma_n, "largest n");
            sub->add_option("--order", cfg.lemma_order, "truncation order in x");
        }
    }

    try {
        app.parse(argc, argv);
    } catch (CLI::CallForHelp const& e) {
        return app.exit(e);
    } catch (CLI::CallForAllHelp const& e) {
        return app.exit(e);
    } catch (CLI::ParseError const& e) {
        app.exit(e);
        return exit_code::input_error;
    }

    std::string command = app.get_subcommands().front()->get_name();
    try {
        cfg.format = parse_format(format);
        CommandResult result = run_command(command, cfg);
        std::string text = result.render(cfg.format);
        if (output.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(output, std::ios::binary);
            if (!out)
                throw InputError("cannot open " + output);
            out << text;
        }
        if (cfg.format != OutputFormat::text)
            for (auto const& n : result.notes)
                std::cerr << n << "\n";
        return result.exit_code;
    } catch (InputError const& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code::input_error;
    } catch (DimensionMismatch const& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code::input_error;
    } catch (ResourceLimitExceeded const& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return exit_code::resource_cap;
    } catch (std::exception const& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
