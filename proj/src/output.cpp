#include "dmac/output.hpp"

#include <charconv>
#include <fstream>
#include <string>

#include "dmac/config.hpp"
#include "json.hpp"

namespace dmac {

namespace {

using nlohmann::json;

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
    if (!out) {
        throw Error(ErrorCategory::io, "cannot write " + path.string());
    }
}

/// Mean of the gap entries over `count` rows starting at `from`.
double window_mean(const GapSeries& gap, int node_count, int from, int count) {
    double sum = 0.0;
    int samples = 0;
    for (int t = from; t < from + count; ++t) {
        for (int node = 0; node < node_count; ++node) {
            sum += gap.abs_diff[static_cast<std::size_t>(t) *
                                    static_cast<std::size_t>(node_count) +
                                static_cast<std::size_t>(node)];
            ++samples;
        }
    }
    return samples > 0 ? sum / static_cast<double>(samples) : 0.0;
}

std::string trajectory_csv_text(const RunOutput& output) {
    std::string text = "t,node,controller,x,u,s,w,a_selected\n";
    for (const ControllerRun& run : output.runs) {
        const TrajectoryRecord& record = run.record;
        const std::string name(to_string(record.controller));
        for (int t = 0; t < record.rows(); ++t) {
            for (int node = 1; node <= record.node_count; ++node) {
                text += std::to_string(t);
                text += ',';
                text += std::to_string(node);
                text += ',';
                text += name;
                text += ',';
                text += format_double(record.state_at(t, node));
                text += ',';
                text += format_double(record.control_at(t, node));
                text += ',';
                text += format_double(record.coupling_at(t, node));
                text += ',';
                text += format_double(record.disturbance_at(t, node));
                text += ',';
                if (record.has_selection()) {
                    text += format_double(record.selected_value_at(t, node));
                }
                text += '\n';
            }
        }
    }
    return text;
}

std::string gap_csv_text(const GapSeries& gap, int node_count) {
    std::string text = "t,node,abs_diff\n";
    const int rows = static_cast<int>(gap.abs_diff.size()) / node_count;
    for (int t = 0; t < rows; ++t) {
        for (int node = 1; node <= node_count; ++node) {
            text += std::to_string(t);
            text += ',';
            text += std::to_string(node);
            text += ',';
            text += format_double(gap.abs_diff[static_cast<std::size_t>(t) *
                                                   static_cast<std::size_t>(node_count) +
                                               static_cast<std::size_t>(node - 1)]);
            text += '\n';
        }
    }
    return text;
}

json summary_json(const ScenarioConfig& config,
                  const RunOutput& output,
                  const std::vector<std::string>& gap_names) {
    json summary;
    summary["config"] = json::parse(serialize_config(config));

    bool aborted = false;
    json runs = json::array();
    for (const ControllerRun& run : output.runs) {
        json entry;
        entry["controller"] = std::string(to_string(run.record.controller));
        entry["rows"] = run.record.rows();
        entry["status"] = run.blowup ? "aborted" : "ok";
        if (run.blowup) {
            aborted = true;
            entry["blowup"] = {{"step", run.blowup->step},
                               {"node", run.blowup->node},
                               {"value", run.blowup->value}};
        }
        runs.push_back(std::move(entry));
    }
    summary["runs"] = runs;
    summary["status"] = aborted ? "aborted" : "ok";

    json controllers;
    for (const ControllerMetrics& cm : output.metrics.per_controller) {
        json entry;
        entry["cumulative_cost"] = cm.cumulative_cost;
        entry["disturbance_energy"] = cm.disturbance_energy;
        entry["final_cost"] = cm.cumulative_cost.empty() ? 0.0 : cm.cumulative_cost.back();
        entry["final_energy"] =
            cm.disturbance_energy.empty() ? 0.0 : cm.disturbance_energy.back();
        entry["gain_ratio"] = cm.gain_ratio ? json(*cm.gain_ratio) : json(nullptr);
        controllers[std::string(to_string(cm.controller))] = std::move(entry);
    }
    summary["metrics"]["controllers"] = controllers;

    if (!output.metrics.identification_time.empty()) {
        json times = json::array();
        for (const auto& t : output.metrics.identification_time) {
            times.push_back(t ? json(*t) : json(nullptr));
        }
        summary["metrics"]["identification_time"] = times;
    }

    json gaps;
    for (std::size_t g = 0; g < output.metrics.gaps.size(); ++g) {
        const GapSeries& gap = output.metrics.gaps[g];
        const int n = config.topology.node_count();
        const int rows = static_cast<int>(gap.abs_diff.size()) / n;
        const int window = std::min(10, rows);
        const std::string key = std::string(to_string(gap.first)) + "_vs_" +
                                std::string(to_string(gap.second));
        gaps[key] = {{"file", gap_names[g]},
                     {"mean_first_10", window_mean(gap, n, 0, window)},
                     {"mean_last_10", window_mean(gap, n, rows - window, window)}};
    }
    summary["metrics"]["gaps"] = gaps;

    return summary;
}

}  // namespace

std::string format_double(double value) {
    char buffer[64];
    const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
    return std::string(buffer, result.ptr);
}

OutputBundle run_scenario(const ScenarioConfig& config, const std::filesystem::path& out_dir) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) {
        throw Error(ErrorCategory::io,
                    "cannot create output directory " + out_dir.string() + ": " + ec.message());
    }

    const RunOutput output = run(config);

    OutputBundle bundle;
    bundle.trajectory_csv = out_dir / "trajectory.csv";
    write_file(bundle.trajectory_csv, trajectory_csv_text(output));

    std::vector<std::string> gap_names;
    for (const GapSeries& gap : output.metrics.gaps) {
        const std::string name = "gap_" + std::string(to_string(gap.first)) + "_" +
                                 std::string(to_string(gap.second)) + ".csv";
        gap_names.push_back(name);
        const std::filesystem::path path = out_dir / name;
        write_file(path, gap_csv_text(gap, config.topology.node_count()));
        bundle.gap_files.push_back(path);
    }

    bundle.summary_json = out_dir / "summary.json";
    write_file(bundle.summary_json, summary_json(config, output, gap_names).dump(2) + "\n");

    for (const ControllerRun& run : output.runs) {
        if (run.blowup) {
            bundle.aborted = true;
        }
    }
    return bundle;
}

}  // namespace dmac
