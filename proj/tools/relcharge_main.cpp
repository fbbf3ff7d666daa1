#include <CLI11.hpp>

#include <functional>
#include <iostream>
#include <string>

#include "relcharge/commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Relativistic charge dynamics in spacetime-dependent backgrounds"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir = ".";
    std::size_t threads = 0;
    bool threads_set = false;
    std::uint64_t seed = 0;
    bool seed_set = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--config", config_path, "run configuration (JSON)")->required();
        cmd->add_option("--out", out_dir, "output directory");
        cmd->add_option("--threads", threads, "worker count override")
            ->each([&](const std::string&) { threads_set = true; });
        cmd->add_option("--seed", seed, "seed override")
            ->each([&](const std::string&) { seed_set = true; });
    };

    CLI::App* simulate = app.add_subcommand("simulate", "integrate a trajectory and track invariants");
    CLI::App* scan = app.add_subcommand("scan", "scan the Poincare generators for field symmetries");
    CLI::App* compare = app.add_subcommand("compare", "closed-form orbit vs numerical integration");
    CLI::App* sweep = app.add_subcommand("sweep", "run a parameter grid of trajectories");
    for (CLI::App* cmd : {simulate, scan, compare, sweep}) add_common(cmd);

    CLI11_PARSE(app, argc, argv);

    relcharge::RunConfig cfg;
    try {
        cfg = relcharge::load_config(config_path);
    } catch (const relcharge::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return relcharge::kExitConfig;
    }

    relcharge::CommandOptions opts;
    opts.out_dir = out_dir;
    if (threads_set) opts.workers = threads;
    if (seed_set) opts.seed = seed;

    try {
        if (simulate->parsed()) return relcharge::cmd_simulate(cfg, opts);
        if (scan->parsed()) return relcharge::cmd_scan(cfg, opts);
        if (compare->parsed()) return relcharge::cmd_compare(cfg, opts);
        if (sweep->parsed()) return relcharge::cmd_sweep(cfg, opts);
    } catch (const relcharge::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return relcharge::kExitConfig;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return relcharge::kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return relcharge::kExitFailure;
    }
    return relcharge::kExitFailure;
}
