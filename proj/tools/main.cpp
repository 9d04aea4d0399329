#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dmac/config.hpp"
#include "dmac/output.hpp"
#include "json.hpp"

namespace {

using nlohmann::json;

void print_error(dmac::ErrorCategory category, const std::string& message) {
    const json line = {{"error", {{"category", std::string(dmac::to_string(category))},
                                  {"message", message}}}};
    std::cerr << line.dump() << "\n";
}

std::vector<dmac::ControllerKind> parse_controller_names(const std::vector<std::string>& names) {
    std::vector<dmac::ControllerKind> kinds;
    for (const std::string& name : names) {
        if (name == "all") {
            return {dmac::ControllerKind::minimax, dmac::ControllerKind::oracle,
                    dmac::ControllerKind::nominal};
        }
        const auto kind = dmac::controller_from_string(name);
        if (!kind) {
            throw dmac::Error(dmac::ErrorCategory::usage, "unknown controller '" + name + "'");
        }
        kinds.push_back(*kind);
    }
    return kinds;
}

int execute_bundle(const dmac::ScenarioConfig& config, const std::string& out_dir) {
    const dmac::OutputBundle bundle = dmac::run_scenario(config, out_dir);
    std::cout << "wrote " << bundle.trajectory_csv.string() << "\n";
    std::cout << "wrote " << bundle.summary_json.string() << "\n";
    for (const auto& path : bundle.gap_files) {
        std::cout << "wrote " << path.string() << "\n";
    }
    if (bundle.aborted) {
        print_error(dmac::ErrorCategory::engine,
                    "simulation aborted (state blow-up); partial outputs flagged in summary.json");
        return dmac::exit_code(dmac::ErrorCategory::engine);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Simulator for distributed adaptive control of networked scalar systems"};
    app.require_subcommand(1);

    // simulate
    auto* simulate = app.add_subcommand("simulate", "Run a scenario from a JSON config");
    std::string config_path;
    std::string out_dir;
    std::optional<std::uint64_t> seed;
    std::vector<std::string> controller_names;
    simulate->add_option("--config", config_path, "Scenario JSON file")->required();
    simulate->add_option("--out", out_dir, "Output directory")->required();
    simulate->add_option("--seed", seed, "Override the config's master seed");
    simulate->add_option("--controllers", controller_names,
                         "Subset of minimax,oracle,nominal (or all)")
        ->delimiter(',');

    // paper-preset
    auto* preset = app.add_subcommand("paper-preset",
                                      "Run the built-in 7-node buffer-network experiment");
    std::string preset_out;
    std::uint64_t preset_seed = 1;
    preset->add_option("--out", preset_out, "Output directory")->required();
    preset->add_option("--seed", preset_seed, "Master seed (default 1)");

    // admissible
    auto* admissible = app.add_subcommand(
        "admissible", "Print the open interval of decay values allowed at a degree");
    double gain = 0.0;
    int degree = 0;
    admissible->add_option("--b", gain, "Coupling gain")->required();
    admissible->add_option("--degree", degree, "Node degree")->required();

    try {
        app.parse(argc, argv);

        if (simulate->parsed()) {
            dmac::ScenarioConfig config = dmac::parse_config_file(config_path, seed);
            if (!controller_names.empty()) {
                config.controllers = parse_controller_names(controller_names);
                dmac::validate(config);
            }
            return execute_bundle(config, out_dir);
        }
        if (preset->parsed()) {
            return execute_bundle(dmac::paper_preset(preset_seed), preset_out);
        }
        if (admissible->parsed()) {
            const dmac::AdmissibleInterval interval = dmac::admissible_interval(gain, degree);
            const json line = {{"b", gain}, {"degree", degree}, {"lo", interval.lo},
                               {"hi", interval.hi}};
            std::cout << line.dump() << "\n";
            return 0;
        }
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e);  // --help and friends
        }
        print_error(dmac::ErrorCategory::usage, e.what());
        return dmac::exit_code(dmac::ErrorCategory::usage);
    } catch (const dmac::Error& e) {
        print_error(e.category(), e.what());
        return dmac::exit_code(e.category());
    } catch (const std::exception& e) {
        print_error(dmac::ErrorCategory::engine, e.what());
        return 1;
    }
    return 0;
}
