#pragma once

#include <cstdint>
#include <vector>

#include "dmac/disturbance.hpp"
#include "dmac/dynamics.hpp"
#include "dmac/topology.hpp"
#include "dmac/trajectory.hpp"

namespace dmac {

/// A fully resolved experiment: every model value explicit, every nominal
/// decay a number, the disturbance self-contained. Equal configs (including
/// the seed) produce bit-identical runs.
struct ScenarioConfig {
    Topology topology;
    ModelSet models;  // carries the coupling gain
    int horizon = 0;
    std::vector<double> initial_state;
    DisturbanceSpec disturbance;
    std::vector<ControllerKind> controllers;
    std::vector<double> nominal_decay;  // per node
    std::uint64_t seed = 0;

    double coupling_gain() const noexcept { return models.coupling_gain; }

    friend bool operator==(const ScenarioConfig&, const ScenarioConfig&) = default;
};

/// Full structural and admissibility validation; throws on the first defect.
void validate(const ScenarioConfig& config);

}  // namespace dmac
