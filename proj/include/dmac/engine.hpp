#pragma once

#include <optional>
#include <vector>

#include "dmac/metrics.hpp"
#include "dmac/scenario.hpp"

namespace dmac {

/// Diagnostics of an aborted run.
struct BlowUp {
    int step = 0;
    int node = 0;
    double value = 0.0;
};

struct ControllerRun {
    TrajectoryRecord record;
    std::optional<BlowUp> blowup;  // set when the run aborted at `record.rows()` rows
};

struct RunOutput {
    std::vector<ControllerRun> runs;  // one per selected controller, config order
    Metrics metrics;
};

/// Runs the closed loop for every selected controller under one shared
/// disturbance realization. Each round: (1) every node computes its control
/// from its own state (and, for the adaptive law, its own statistics);
/// (2) neighbor controls are exchanged and coupling sums formed; (3) states
/// advance and adaptive nodes record their transition. The terminal row logs
/// the control each node would apply next, so cost sums cover t = 0..horizon.
/// Deterministic given the config.
RunOutput run(const ScenarioConfig& config);

/// Per node, the smallest t* such that the selected model equals the true
/// model at every logged step from t* on; empty when the selection never
/// settles on the truth. Requires an adaptive record.
std::vector<std::optional<int>> identification_time(const TrajectoryRecord& record,
                                                    const ModelSet& models);

/// Recomputes one node's adaptive control sequence from logged global state
/// and control histories (row-major, rows x node_count). The computation
/// touches only the node's own column and its neighbors' control columns,
/// which makes the information structure directly testable.
std::vector<double> replay_minimax_controls(const ModelSet& models,
                                            const Topology& topology,
                                            const std::vector<double>& states,
                                            const std::vector<double>& controls,
                                            int node);

}  // namespace dmac
