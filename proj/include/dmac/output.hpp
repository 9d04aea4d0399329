#pragma once

#include <filesystem>
#include <vector>

#include "dmac/engine.hpp"

namespace dmac {

/// Files produced by one scenario execution.
struct OutputBundle {
    std::filesystem::path trajectory_csv;
    std::filesystem::path summary_json;
    std::vector<std::filesystem::path> gap_files;
    bool aborted = false;
};

/// Runs the scenario and writes trajectory.csv, summary.json and one gap
/// series file per comparable controller pair into `out_dir` (created if
/// missing). A blown-up run still writes its partial rows; the summary flags
/// the abort and `aborted` is set. Identical configs produce byte-identical
/// files.
OutputBundle run_scenario(const ScenarioConfig& config, const std::filesystem::path& out_dir);

/// Shortest decimal text that parses back to exactly this double.
std::string format_double(double value);

}  // namespace dmac
