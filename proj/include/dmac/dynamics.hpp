#pragma once

#include <span>
#include <vector>

#include "dmac/topology.hpp"

namespace dmac {

/// Concatenated node states after `step` completed transitions.
struct NetworkState {
    int step = 0;
    std::vector<double> x;  // slot k holds node k+1

    friend bool operator==(const NetworkState&, const NetworkState&) = default;
};

/// Finite candidate set of decay values per node, with the hidden true model
/// and the shared coupling gain. Controllers never read `true_index`; only
/// the plant does.
struct ModelSet {
    double coupling_gain = 0.0;
    std::vector<std::vector<double>> candidates;  // per node, ascending
    std::vector<int> true_index;                  // 1-based into candidates[node-1]

    int node_count() const noexcept { return static_cast<int>(candidates.size()); }

    int model_count() const noexcept {
        return candidates.empty() ? 0 : static_cast<int>(candidates.front().size());
    }

    /// True decay value of a 1-based node.
    double true_value(int node) const {
        const auto& list = candidates.at(static_cast<std::size_t>(node - 1));
        return list.at(static_cast<std::size_t>(true_index.at(static_cast<std::size_t>(node - 1)) - 1));
    }

    friend bool operator==(const ModelSet&, const ModelSet&) = default;
};

/// Throws unless every candidate is admissible for its node's degree, all
/// candidate lists share one size, and every true index is in range.
void validate_model_set(const ModelSet& models, const Topology& topology);

/// Net control flow into `node` along its edges, before scaling by the
/// coupling gain: sum over neighbors j of (u_node - u_j).
double coupling_sum(int node, std::span<const double> controls, const Topology& topology);

/// One node transition: decay * state + gain * coupling + disturbance.
double node_step(double decay, double state, double gain, double coupling, double disturbance);

/// Advances every node one step under the true models. Throws an engine
/// error when any input entry is non-finite.
NetworkState network_step(const NetworkState& state,
                          const ModelSet& models,
                          std::span<const double> controls,
                          std::span<const double> disturbances,
                          const Topology& topology);

}  // namespace dmac
