#include "dmac/metrics.hpp"

#include <cmath>
#include <string>

#include "dmac/errors.hpp"

namespace dmac {

namespace {

void check_horizon(const TrajectoryRecord& record, int t_prime) {
    if (t_prime < 0 || t_prime >= record.rows()) {
        throw Error(ErrorCategory::config,
                    "horizon " + std::to_string(t_prime) + " outside logged rows [0," +
                        std::to_string(record.rows() - 1) + "]");
    }
}

}  // namespace

double cumulative_cost(const TrajectoryRecord& record, int t_prime) {
    check_horizon(record, t_prime);
    double total = 0.0;
    for (int t = 0; t <= t_prime; ++t) {
        double row = 0.0;
        for (int node = 1; node <= record.node_count; ++node) {
            const double x = record.state_at(t, node);
            const double u = record.control_at(t, node);
            row += x * x + u * u;
        }
        total += row;
    }
    return total;
}

double disturbance_energy(const TrajectoryRecord& record, int t_prime) {
    check_horizon(record, t_prime);
    double total = 0.0;
    for (int t = 0; t <= t_prime; ++t) {
        double row = 0.0;
        for (int node = 1; node <= record.node_count; ++node) {
            const double w = record.disturbance_at(t, node);
            row += w * w;
        }
        total += row;
    }
    return total;
}

std::optional<double> gain_ratio(const TrajectoryRecord& record) {
    std::optional<double> best;
    double cost = 0.0;
    double energy = 0.0;
    for (int t = 0; t < record.rows(); ++t) {
        double cost_row = 0.0;
        double energy_row = 0.0;
        for (int node = 1; node <= record.node_count; ++node) {
            const double x = record.state_at(t, node);
            const double u = record.control_at(t, node);
            const double w = record.disturbance_at(t, node);
            cost_row += x * x + u * u;
            energy_row += w * w;
        }
        cost += cost_row;
        energy += energy_row;
        if (energy > 0.0) {
            const double ratio = std::sqrt(cost / energy);
            if (!best || ratio > *best) {
                best = ratio;
            }
        }
    }
    return best;
}

std::vector<double> trajectory_gap(const TrajectoryRecord& a, const TrajectoryRecord& b) {
    if (a.node_count != b.node_count || a.rows() != b.rows()) {
        throw Error(ErrorCategory::config, "trajectory_gap: records have different shapes");
    }
    std::vector<double> gap(a.state.size());
    for (std::size_t k = 0; k < gap.size(); ++k) {
        gap[k] = std::abs(a.state[k] - b.state[k]);
    }
    return gap;
}

}  // namespace dmac
