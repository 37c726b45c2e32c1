#include <string>

#include <CLI11.hpp>

#include "lakeflow/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"lakeflow: chain-of-lakes simulation and predictive dam control"};
    app.require_subcommand(1);

    lakeflow::CliOptions opt;
    std::uint64_t seed = 0;
    bool seed_set = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--config", opt.config, "run config file (JSON)");
        cmd->add_option("--data", opt.data, "historical data CSV (overrides the config)");
        cmd->add_option("--out", opt.out, "output directory")->required();
        cmd->add_option("--seed", seed, "RNG seed (overrides the config)")
            ->each([&](const std::string&) { seed_set = true; });
    };

    add_common(app.add_subcommand("fit", "fit lake->river coefficients from historical data"));
    add_common(app.add_subcommand("optimize",
                                  "anneal a full-year release plan that maximizes the grade"));
    add_common(app.add_subcommand("mpc", "run the receding-horizon controller over a scenario"));
    add_common(app.add_subcommand("sensitivity",
                                  "perturb the scenario and report sensitivity indices"));
    add_common(app.add_subcommand("generate-synthetic",
                                  "fabricate a seeded synthetic scenario or fit dataset"));

    CLI11_PARSE(app, argc, argv);

    if (seed_set)
        opt.seed = seed;
    return lakeflow::run_command(app.get_subcommands().front()->get_name(), opt);
}
