#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <string>

#include "biphase/errors.hpp"
#include "runner/experiments.hpp"
#include "runner/run_config.hpp"

using namespace biphase;

int main(int argc, char** argv) {
    CLI::App app{"Biphase tumor fluid-flow laboratory: finite differences, closed forms and "
                 "boundary-layer approximants on the unit ball"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string config_path;
    app.add_option("--config", config_path, "key=value configuration file")
        ->check(CLI::ExistingFile);

    std::map<std::string, std::string> flag_values;
    for (const auto& key : runner::config_keys()) {
        app.add_option("--" + key, flag_values[key], "overrides '" + key + "' from the config");
    }

    const std::map<std::string, std::string> descriptions{
        {"profiles", "q and p profiles (finite differences, closed form, approximant) per eps"},
        {"converge", "approximation error norms and log-log slopes over an eps sweep"},
        {"decay", "interior decay of q away from the boundary"},
        {"bench", "timing of the coupled solve against approximant evaluation"},
    };
    for (const auto& [name, text] : descriptions) {
        app.add_subcommand(name, text);
    }

    CLI11_PARSE(app, argc, argv);

    try {
        std::vector<runner::Override> overrides;
        for (const auto& key : runner::config_keys()) {
            if (app.count("--" + key) > 0) {
                overrides.emplace_back(key, flag_values[key]);
            }
        }
        runner::RunConfig cfg = runner::parse_config(config_path, overrides);
        cfg.experiment = app.get_subcommands().front()->get_name();
        for (const auto& file : runner::run_experiment(cfg)) {
            std::cout << file.string() << '\n';
        }
    } catch (const runner::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const SolverError& e) {
        std::cerr << "solver failure: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
