#include "dmac/controllers.hpp"

#include <algorithm>
#include <cmath>

namespace dmac {

void SufficientStatistics::add_transition(double state,
                                          double coupling,
                                          double next_state,
                                          double gain) {
    const double g = gain * coupling - next_state;
    quad += state * state;
    cross += state * g;
    offset += g * g;
    samples += 1;
}

double SufficientStatistics::residual(double decay) const {
    const double value = decay * decay * quad + 2.0 * decay * cross + offset;
    if (value < 0.0 && -value <= 1e-12 * std::max(quad, offset)) {
        return 0.0;
    }
    return value;
}

SelectedModel select_model(const SufficientStatistics& stats,
                           std::span<const double> candidates) {
    if (candidates.empty()) {
        throw Error(ErrorCategory::config, "select_model: empty candidate list");
    }
    SelectedModel best{candidates[0], 1, stats.residual(candidates[0])};
    for (std::size_t k = 1; k < candidates.size(); ++k) {
        const double r = stats.residual(candidates[k]);
        if (r < best.residual) {
            best = SelectedModel{candidates[k], static_cast<int>(k) + 1, r};
        }
    }
    return best;
}

namespace {

double state_feedback(double state, double decay, double gain) {
    if (decay == 1.0) {
        throw Error(ErrorCategory::engine,
                    "state feedback undefined at decay 1: corrupted model value");
    }
    return gain * state / (decay - 1.0);
}

}  // namespace

double minimax_control(double state, double selected_decay, double gain) {
    return state_feedback(state, selected_decay, gain);
}

double hinf_control(double state, double true_decay, double gain) {
    return state_feedback(state, true_decay, gain);
}

double nominal_control(double state, double nominal_decay, double gain) {
    return state_feedback(state, nominal_decay, gain);
}

}  // namespace dmac
