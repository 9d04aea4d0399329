#pragma once

#include <optional>
#include <vector>

#include "dmac/trajectory.hpp"

namespace dmac {

/// Cost and disturbance-energy accounting for one controller run.
struct ControllerMetrics {
    ControllerKind controller = ControllerKind::minimax;
    std::vector<double> cumulative_cost;     // C(T'), one entry per logged row
    std::vector<double> disturbance_energy;  // W(T')
    std::optional<double> gain_ratio;        // empty when no horizon has W > 0
};

/// Elementwise |state difference| series between two runs.
struct GapSeries {
    ControllerKind first = ControllerKind::minimax;
    ControllerKind second = ControllerKind::oracle;
    std::vector<double> abs_diff;  // row-major, rows x node_count
};

struct Metrics {
    std::vector<ControllerMetrics> per_controller;
    std::vector<std::optional<int>> identification_time;  // per node; empty without a minimax run
    std::vector<GapSeries> gaps;
};

/// Sum over tau = 0..t_prime and all nodes of x^2 + u^2.
double cumulative_cost(const TrajectoryRecord& record, int t_prime);

/// Sum over tau = 0..t_prime and all nodes of w^2.
double disturbance_energy(const TrajectoryRecord& record, int t_prime);

/// Supremum over horizons with positive disturbance energy of
/// sqrt(cost / energy); empty when every horizon has zero energy.
std::optional<double> gain_ratio(const TrajectoryRecord& record);

/// Per-step per-node absolute state difference; records must agree on node
/// count and logged rows.
std::vector<double> trajectory_gap(const TrajectoryRecord& a, const TrajectoryRecord& b);

}  // namespace dmac
