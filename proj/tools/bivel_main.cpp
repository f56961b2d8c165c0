/// @file bivel_main.cpp
/// @brief Command-line driver: run, sweep, list, describe, check.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "bivel/core/errors.hpp"
#include "bivel/harness/config.hpp"
#include "bivel/harness/runner.hpp"
#include "bivel/harness/scenarios.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw bivel::core::ConfigError("cannot open configuration file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

/// Worker-count priority: --workers flag, then BIVEL_WORKERS, then the
/// config file's `workers` key, then hardware concurrency (resolved inside
/// run_sweep when everything else is zero).
int resolve_workers(int flag_value) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("BIVEL_WORKERS")) {
        try {
            const int parsed = std::stoi(env);
            if (parsed > 0) return parsed;
        } catch (...) {
            throw bivel::core::ConfigError(
                std::string("BIVEL_WORKERS must be a positive integer, got '") + env + "'");
        }
    }
    return 0;
}

int command_run(const std::string& config_path) {
    const auto config = bivel::harness::parse_config(read_file(config_path));
    const auto outcome = bivel::harness::run_scenario(config);
    std::cout << outcome.report;
    std::cout << "outputs written to " << outcome.output_dir << "\n";
    return 0;
}

int command_sweep(const std::string& config_path, int workers_flag) {
    const auto config = bivel::harness::parse_config(read_file(config_path));
    const int workers = resolve_workers(workers_flag);
    const auto outcomes = bivel::harness::run_sweep(config, workers);
    std::cout << outcomes.size() << " runs completed; outputs under " << config.output_dir
              << "\n";
    return 0;
}

int command_list() {
    std::size_t width = 0;
    for (const auto& scenario : bivel::harness::scenario_library()) {
        width = std::max(width, scenario.name.size());
    }
    for (const auto& scenario : bivel::harness::scenario_library()) {
        std::cout << scenario.name << std::string(width - scenario.name.size() + 2, ' ')
                  << scenario.summary << "\n";
    }
    return 0;
}

int command_describe(const std::string& name) {
    const auto* scenario = bivel::harness::find_scenario(name);
    if (scenario == nullptr) {
        throw bivel::core::ConfigError("unknown scenario '" + name +
                                       "'; see `bivel list` for the available names");
    }
    std::cout << scenario->name << ": " << scenario->summary << "\n\n"
              << scenario->description << "\ndefaults:\n";
    std::istringstream defaults(scenario->defaults);
    for (std::string line; std::getline(defaults, line);) {
        std::cout << "  " << line << "\n";
    }
    return 0;
}

int command_check() {
    bool all_passed = false;
    std::cout << bivel::harness::check_report(&all_passed);
    return all_passed ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"bivel: volume-transport hydrodynamics laboratory"};
    app.require_subcommand(1);

    std::string run_config;
    auto* run_cmd = app.add_subcommand("run", "execute one configuration");
    run_cmd->add_option("config", run_config, "configuration file")
        ->required()
        ->check(CLI::ExistingFile);

    std::string sweep_config;
    int workers_flag = 0;
    auto* sweep_cmd =
        app.add_subcommand("sweep", "expand a configuration's sweep axes and run them all");
    sweep_cmd->add_option("config", sweep_config, "configuration file")
        ->required()
        ->check(CLI::ExistingFile);
    sweep_cmd->add_option("-w,--workers", workers_flag, "parallel worker threads")
        ->check(CLI::PositiveNumber);

    auto* list_cmd = app.add_subcommand("list", "list the built-in scenarios");

    std::string describe_name;
    auto* describe_cmd =
        app.add_subcommand("describe", "show a scenario's documentation and defaults");
    describe_cmd->add_option("name", describe_name, "scenario name")->required();

    auto* check_cmd =
        app.add_subcommand("check", "run the built-in structural check suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& error) {
        return app.exit(error);
    }

    try {
        if (run_cmd->parsed()) return command_run(run_config);
        if (sweep_cmd->parsed()) return command_sweep(sweep_config, workers_flag);
        if (list_cmd->parsed()) return command_list();
        if (describe_cmd->parsed()) return command_describe(describe_name);
        if (check_cmd->parsed()) return command_check();
    } catch (const bivel::core::DivergenceError& error) {
        std::cerr << "error: " << error.what() << "\n";
        return 2;
    } catch (const bivel::core::ConfigError& error) {
        std::cerr << "error: " << error.what() << "\n";
        return 1;
    } catch (const bivel::core::ValidationError& error) {
        std::cerr << "error: " << error.what() << "\n";
        return 1;
    } catch (const std::exception& error) {
        std::cerr << "internal error: " << error.what() << "\n";
        return 1;
    }
    return 1;
}
