#include "qmod/fixtures.hpp"
#include "qmod/runner.hpp"
#include "qmod/version.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

void add_common(CLI::App* cmd, qmod::RunConfig& cfg) {
    cmd->add_option("--fixture", cfg.fixture, "fixture name or .json path");
    cmd->add_option("--order", cfg.order, "epsilon truncation order")->check(CLI::NonNegativeNumber);
    cmd->add_option("--seed", cfg.seed, "seed for randomized probes");
    cmd->add_option("--trials", cfg.trials, "probes per randomized check")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--output", cfg.output, "text | structured")
        ->check(CLI::IsMember({"text", "structured"}));
    cmd->add_option("--data-dir", cfg.data_dir, "fixture directory override");
    cmd->add_option("--wheel-sign", [&cfg](const std::vector<std::string>& vals) {
            if (vals.empty() || (vals[0] != "+" && vals[0] != "-"))
                return false;
            cfg.wheel_sign = vals[0] == "+" ? +1 : -1;
            return true;
        },
        "wheel-weight sign convention: + or -");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification toolkit for Poisson structures, Lie algebra \n"
                 "cohomology, truncated star products, and character obstructions"};
    app.set_version_flag("--version", qmod::kVersion);
    app.require_subcommand(1);

    qmod::RunConfig cfg;

    CLI::App* check = app.add_subcommand("check-poisson",
                                         "verify the Jacobi identity, its graded pieces, and "
                                         "coisotropy for a fixture");
    add_common(check, cfg);

    CLI::App* coh = app.add_subcommand("cohomology",
                                       "Chevalley-Eilenberg cohomology of a Lie algebra fixture");
    add_common(coh, cfg);
    coh->add_option("--module", cfg.module, "trivial | adjoint | coadjoint | <matrices.json>");

    CLI::App* star = app.add_subcommand("star-verify",
                                        "run the star-product oracle suite (unit law, "
                                        "associativity, character, intertwining)");
    add_common(star, cfg);

    CLI::App* obs = app.add_subcommand("obstruction",
                                       "assemble the low-order constraint equations and decide "
                                       "feasibility with certificates");
    add_common(obs, cfg);
    obs->add_option("--pi1", cfg.pi1, "zero | all-admissible | <multivector.json>");

    CLI::App* all = app.add_subcommand("report-all", "run every verification pipeline");
    add_common(all, cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help / --version
            app.exit(e);
            return 0;
        }
        std::cerr << e.what() << "\n";
        return 2;
    }

    for (CLI::App* sub : {check, coh, star, obs, all})
        if (sub->parsed())
            cfg.command = sub->get_name();

    try {
        qmod::Report report = qmod::run(cfg);
        if (cfg.output == "structured")
            std::cout << report.to_json().dump(2) << "\n";
        else
            std::cout << report.to_text();
        return report.pass() ? 0 : 1;
    } catch (const qmod::FixtureError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
