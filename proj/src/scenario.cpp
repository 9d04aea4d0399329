#include "dmac/scenario.hpp"

#include <cmath>
#include <set>
#include <sstream>

namespace dmac {

std::optional<ControllerKind> controller_from_string(std::string_view name) noexcept {
    if (name == "minimax") return ControllerKind::minimax;
    if (name == "oracle") return ControllerKind::oracle;
    if (name == "nominal") return ControllerKind::nominal;
    return std::nullopt;
}

namespace {

void validate_disturbance(const ScenarioConfig& config) {
    const auto& spec = config.disturbance;
    const std::size_t n = static_cast<std::size_t>(config.topology.node_count());
    switch (spec.kind) {
        case DisturbanceKind::zero:
            return;
        case DisturbanceKind::sinusoid:
            if (spec.sinusoid.amplitude.size() != n ||
                spec.sinusoid.angular_frequency.size() != n || spec.sinusoid.phase.size() != n) {
                throw Error(ErrorCategory::config,
                            "sinusoid parameters must give one value per node");
            }
            return;
        case DisturbanceKind::gaussian:
            if (spec.gaussian_stddev < 0.0) {
                throw Error(ErrorCategory::config, "gaussian stddev must be nonnegative");
            }
            return;
        case DisturbanceKind::file:
            if (spec.file_columns != config.topology.node_count()) {
                throw Error(ErrorCategory::config,
                            "disturbance file has " + std::to_string(spec.file_columns) +
                                " columns, expected " +
                                std::to_string(config.topology.node_count()));
            }
            if (spec.file_rows() < config.horizon + 1) {
                throw Error(ErrorCategory::config,
                            "disturbance file covers " + std::to_string(spec.file_rows()) +
                                " steps, horizon needs " + std::to_string(config.horizon + 1));
            }
            return;
    }
    throw Error(ErrorCategory::config, "unknown disturbance kind");
}

}  // namespace

void validate(const ScenarioConfig& config) {
    if (config.topology.node_count() < 1) {
        throw Error(ErrorCategory::config, "scenario has no topology");
    }
    if (config.horizon < 0) {
        throw Error(ErrorCategory::config, "horizon must be nonnegative");
    }
    validate_model_set(config.models, config.topology);

    const int n = config.topology.node_count();
    if (static_cast<int>(config.initial_state.size()) != n) {
        throw Error(ErrorCategory::config, "initial_state must give one value per node");
    }
    for (double x : config.initial_state) {
        if (!std::isfinite(x)) {
            throw Error(ErrorCategory::config, "initial_state entries must be finite");
        }
    }

    if (config.controllers.empty()) {
        throw Error(ErrorCategory::config, "no controller selected");
    }
    std::set<ControllerKind> unique(config.controllers.begin(), config.controllers.end());
    if (unique.size() != config.controllers.size()) {
        throw Error(ErrorCategory::config, "duplicate controller selection");
    }

    const bool wants_nominal =
        unique.count(ControllerKind::nominal) > 0 || !config.nominal_decay.empty();
    if (wants_nominal) {
        if (static_cast<int>(config.nominal_decay.size()) != n) {
            throw Error(ErrorCategory::config,
                        "nominal decay values must give one value per node");
        }
        for (int node = 1; node <= n; ++node) {
            const double value = config.nominal_decay[static_cast<std::size_t>(node - 1)];
            const int degree = config.topology.degree(node);
            if (!validate_model(value, config.coupling_gain(), degree)) {
                const auto interval = admissible_interval(config.coupling_gain(), degree);
                std::ostringstream out;
                out << "node " << node << ": nominal decay " << value
                    << " violates the communication constraint; admissible interval is ("
                    << interval.lo << "," << interval.hi << ")";
                throw Error(ErrorCategory::admissibility, out.str());
            }
        }
    }

    validate_disturbance(config);
}

}  // namespace dmac
