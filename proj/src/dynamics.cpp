#include "dmac/dynamics.hpp"

#include <cmath>
#include <sstream>

namespace dmac {

void validate_model_set(const ModelSet& models, const Topology& topology) {
    if (models.node_count() != topology.node_count()) {
        throw Error(ErrorCategory::config, "model set covers " +
                                               std::to_string(models.node_count()) +
                                               " nodes, topology has " +
                                               std::to_string(topology.node_count()));
    }
    if (!(models.coupling_gain > 0.0)) {
        throw Error(ErrorCategory::config, "coupling gain must be positive");
    }
    if (models.true_index.size() != models.candidates.size()) {
        throw Error(ErrorCategory::config, "true_index list does not match candidate lists");
    }

    const int count = models.model_count();
    for (int node = 1; node <= models.node_count(); ++node) {
        const auto& list = models.candidates[static_cast<std::size_t>(node - 1)];
        if (list.empty() || static_cast<int>(list.size()) != count) {
            throw Error(ErrorCategory::config,
                        "node " + std::to_string(node) + ": candidate list size differs");
        }
        for (std::size_t k = 0; k + 1 < list.size(); ++k) {
            if (!(list[k] < list[k + 1])) {
                throw Error(ErrorCategory::config,
                            "node " + std::to_string(node) +
                                ": candidates must be strictly ascending");
            }
        }
        const int degree = topology.degree(node);
        for (double value : list) {
            if (!validate_model(value, models.coupling_gain, degree)) {
                const auto interval = admissible_interval(models.coupling_gain, degree);
                std::ostringstream out;
                out << "node " << node << ": decay value " << value
                    << " violates the communication constraint; admissible interval is ("
                    << interval.lo << "," << interval.hi << ")";
                throw Error(ErrorCategory::admissibility, out.str());
            }
        }
        const int truth = models.true_index[static_cast<std::size_t>(node - 1)];
        if (truth < 1 || truth > count) {
            throw Error(ErrorCategory::config,
                        "node " + std::to_string(node) + ": true_index " +
                            std::to_string(truth) + " outside [1," + std::to_string(count) + "]");
        }
    }
}

double coupling_sum(int node, std::span<const double> controls, const Topology& topology) {
    const auto& neighbor_ids = topology.neighbors(node);
    double sum = static_cast<double>(neighbor_ids.size()) *
                 controls[static_cast<std::size_t>(node - 1)];
    for (int j : neighbor_ids) {
        sum -= controls[static_cast<std::size_t>(j - 1)];
    }
    return sum;
}

double node_step(double decay, double state, double gain, double coupling, double disturbance) {
    return decay * state + gain * coupling + disturbance;
}

NetworkState network_step(const NetworkState& state,
                          const ModelSet& models,
                          std::span<const double> controls,
                          std::span<const double> disturbances,
                          const Topology& topology) {
    const int n = topology.node_count();
    if (static_cast<int>(state.x.size()) != n || static_cast<int>(controls.size()) != n ||
        static_cast<int>(disturbances.size()) != n) {
        throw Error(ErrorCategory::config, "network_step: vector length mismatch");
    }
    for (int node = 1; node <= n; ++node) {
        const std::size_t k = static_cast<std::size_t>(node - 1);
        if (!std::isfinite(state.x[k]) || !std::isfinite(controls[k]) ||
            !std::isfinite(disturbances[k])) {
            throw Error(ErrorCategory::engine,
                        "non-finite input at node " + std::to_string(node) + ", step " +
                            std::to_string(state.step));
        }
    }

    NetworkState next;
    next.step = state.step + 1;
    next.x.resize(static_cast<std::size_t>(n));
    for (int node = 1; node <= n; ++node) {
        const std::size_t k = static_cast<std::size_t>(node - 1);
        next.x[k] = node_step(models.true_value(node), state.x[k], models.coupling_gain,
                              coupling_sum(node, controls, topology), disturbances[k]);
    }
    return next;
}

}  // namespace dmac
