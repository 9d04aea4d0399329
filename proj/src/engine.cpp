#include "dmac/engine.hpp"

#include <cmath>

#include "dmac/controllers.hpp"

namespace dmac {

namespace {

constexpr double kBlowUpThreshold = 1e12;

ControllerRun run_single(const ScenarioConfig& config,
                         ControllerKind kind,
                         const std::vector<double>& disturbance) {
    const Topology& topology = config.topology;
    const ModelSet& models = config.models;
    const int n = topology.node_count();
    const int horizon = config.horizon;
    const double gain = config.coupling_gain();

    ControllerRun out;
    TrajectoryRecord& record = out.record;
    record.controller = kind;
    record.node_count = n;
    record.horizon = horizon;
    const std::size_t capacity =
        static_cast<std::size_t>(horizon + 1) * static_cast<std::size_t>(n);
    record.state.reserve(capacity);
    record.control.reserve(capacity);
    record.coupling.reserve(capacity);
    record.disturbance.reserve(capacity);

    std::vector<MinimaxNodeController> adaptive;
    if (kind == ControllerKind::minimax) {
        adaptive.reserve(static_cast<std::size_t>(n));
        for (int node = 1; node <= n; ++node) {
            adaptive.emplace_back(models.candidates[static_cast<std::size_t>(node - 1)], gain);
        }
        record.selected_value.reserve(capacity);
        record.selected_index.reserve(capacity);
    }

    NetworkState state{0, config.initial_state};
    std::vector<double> controls(static_cast<std::size_t>(n));
    std::vector<double> couplings(static_cast<std::size_t>(n));

    for (int t = 0; t <= horizon; ++t) {
        // Phase 1: each node computes its control from local data only.
        for (int node = 1; node <= n; ++node) {
            const std::size_t k = static_cast<std::size_t>(node - 1);
            switch (kind) {
                case ControllerKind::minimax: {
                    const SelectedModel chosen = adaptive[k].select();
                    controls[k] = minimax_control(state.x[k], chosen.value, gain);
                    record.selected_value.push_back(chosen.value);
                    record.selected_index.push_back(chosen.index);
                    break;
                }
                case ControllerKind::oracle:
                    controls[k] = hinf_control(state.x[k], models.true_value(node), gain);
                    break;
                case ControllerKind::nominal:
                    controls[k] = nominal_control(state.x[k], config.nominal_decay[k], gain);
                    break;
            }
        }

        // Phase 2: controls are exchanged; coupling sums use neighbors only.
        for (int node = 1; node <= n; ++node) {
            couplings[static_cast<std::size_t>(node - 1)] =
                coupling_sum(node, controls, topology);
        }

        const std::size_t row = static_cast<std::size_t>(t) * static_cast<std::size_t>(n);
        record.state.insert(record.state.end(), state.x.begin(), state.x.end());
        record.control.insert(record.control.end(), controls.begin(), controls.end());
        record.coupling.insert(record.coupling.end(), couplings.begin(), couplings.end());
        record.disturbance.insert(record.disturbance.end(), disturbance.begin() + row,
                                  disturbance.begin() + row + static_cast<std::size_t>(n));

        if (t == horizon) {
            break;
        }

        // Phase 3: the plant advances under the true models.
        const std::span<const double> w_row(disturbance.data() + row,
                                            static_cast<std::size_t>(n));
        NetworkState next = network_step(state, models, controls, w_row, topology);

        for (int node = 1; node <= n; ++node) {
            const double value = next.x[static_cast<std::size_t>(node - 1)];
            if (!std::isfinite(value) || std::abs(value) > kBlowUpThreshold) {
                out.blowup = BlowUp{t + 1, node, value};
                return out;
            }
        }

        if (kind == ControllerKind::minimax) {
            for (int node = 1; node <= n; ++node) {
                const std::size_t k = static_cast<std::size_t>(node - 1);
                adaptive[k].observe(state.x[k], couplings[k], next.x[k]);
            }
        }
        state = std::move(next);
    }
    return out;
}

Metrics compute_metrics(const std::vector<ControllerRun>& runs, const ScenarioConfig& config) {
    Metrics metrics;

    for (const ControllerRun& run : runs) {
        const TrajectoryRecord& record = run.record;
        ControllerMetrics cm;
        cm.controller = record.controller;
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
            cm.cumulative_cost.push_back(cost);
            cm.disturbance_energy.push_back(energy);
        }
        cm.gain_ratio = gain_ratio(record);
        metrics.per_controller.push_back(std::move(cm));
    }

    const ControllerRun* minimax_run = nullptr;
    const ControllerRun* oracle_run = nullptr;
    const ControllerRun* nominal_run = nullptr;
    for (const ControllerRun& run : runs) {
        switch (run.record.controller) {
            case ControllerKind::minimax: minimax_run = &run; break;
            case ControllerKind::oracle: oracle_run = &run; break;
            case ControllerKind::nominal: nominal_run = &run; break;
        }
    }

    if (minimax_run != nullptr && minimax_run->record.rows() > 0) {
        metrics.identification_time =
            identification_time(minimax_run->record, config.models);
    }

    const auto add_gap = [&metrics](const ControllerRun* a, const ControllerRun* b) {
        if (a == nullptr || b == nullptr || a->record.rows() != b->record.rows()) {
            return;
        }
        GapSeries gap;
        gap.first = a->record.controller;
        gap.second = b->record.controller;
        gap.abs_diff = trajectory_gap(a->record, b->record);
        metrics.gaps.push_back(std::move(gap));
    };
    add_gap(minimax_run, oracle_run);
    add_gap(nominal_run, oracle_run);

    return metrics;
}

}  // namespace

RunOutput run(const ScenarioConfig& config) {
    validate(config);

    const int n = config.topology.node_count();
    std::vector<double> disturbance(static_cast<std::size_t>(config.horizon + 1) *
                                    static_cast<std::size_t>(n));
    for (int t = 0; t <= config.horizon; ++t) {
        for (int node = 1; node <= n; ++node) {
            disturbance[static_cast<std::size_t>(t) * static_cast<std::size_t>(n) +
                        static_cast<std::size_t>(node - 1)] =
                generate(config.disturbance, t, node);
        }
    }

    RunOutput output;
    output.runs.reserve(config.controllers.size());
    for (ControllerKind kind : config.controllers) {
        output.runs.push_back(run_single(config, kind, disturbance));
    }
    output.metrics = compute_metrics(output.runs, config);
    return output;
}

std::vector<std::optional<int>> identification_time(const TrajectoryRecord& record,
                                                    const ModelSet& models) {
    if (!record.has_selection()) {
        throw Error(ErrorCategory::config,
                    "identification_time needs a record with selected-model data");
    }
    const int rows = record.rows();
    std::vector<std::optional<int>> result(static_cast<std::size_t>(record.node_count));
    for (int node = 1; node <= record.node_count; ++node) {
        const double truth = models.true_value(node);
        if (rows == 0 || record.selected_value_at(rows - 1, node) != truth) {
            continue;  // never settles within the horizon
        }
        int t = rows - 1;
        while (t > 0 && record.selected_value_at(t - 1, node) == truth) {
            --t;
        }
        result[static_cast<std::size_t>(node - 1)] = t;
    }
    return result;
}

std::vector<double> replay_minimax_controls(const ModelSet& models,
                                            const Topology& topology,
                                            const std::vector<double>& states,
                                            const std::vector<double>& controls,
                                            int node) {
    const int n = topology.node_count();
    if (states.size() != controls.size() || n == 0 || states.size() % static_cast<std::size_t>(n) != 0) {
        throw Error(ErrorCategory::config, "replay: history shape mismatch");
    }
    const int rows = static_cast<int>(states.size()) / n;
    const std::size_t k = static_cast<std::size_t>(node - 1);

    MinimaxNodeController controller(models.candidates.at(k), models.coupling_gain);
    std::vector<double> replayed(static_cast<std::size_t>(rows));
    for (int t = 0; t < rows; ++t) {
        const std::size_t row = static_cast<std::size_t>(t) * static_cast<std::size_t>(n);
        replayed[static_cast<std::size_t>(t)] = controller.control(states[row + k]);
        if (t + 1 < rows) {
            const std::span<const double> u_row(controls.data() + row,
                                                static_cast<std::size_t>(n));
            const double s = coupling_sum(node, u_row, topology);
            controller.observe(states[row + k], s, states[row + static_cast<std::size_t>(n) + k]);
        }
    }
    return replayed;
}

}  // namespace dmac
