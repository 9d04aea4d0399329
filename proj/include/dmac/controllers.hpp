#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dmac/errors.hpp"

namespace dmac {

/// Running coefficients of the per-node least-squares selection criterion.
/// With g(tau) = gain * coupling(tau) - state(tau+1), the summed squared
/// one-step prediction error of a candidate decay `a` over all observed
/// transitions is  a^2 * quad + 2 a * cross + offset,  so a transition costs
/// O(1) memory and evaluating a candidate costs O(1) time.
struct SufficientStatistics {
    double quad = 0.0;    // sum of state(tau)^2
    double cross = 0.0;   // sum of state(tau) * g(tau)
    double offset = 0.0;  // sum of g(tau)^2
    std::int64_t samples = 0;

    /// Folds one completed transition into the coefficients.
    void add_transition(double state, double coupling, double next_state, double gain);

    /// Summed squared prediction error of candidate `decay`; nonnegative up
    /// to rounding, with rounding-scale negatives clamped to zero.
    double residual(double decay) const;

    friend bool operator==(const SufficientStatistics&, const SufficientStatistics&) = default;
};

/// Outcome of a model selection.
struct SelectedModel {
    double value = 0.0;   ///< selected decay, a member of the candidate list
    int index = 0;        ///< 1-based candidate index
    double residual = 0.0;
};

/// Candidate minimizing the prediction-error residual; ties break toward the
/// lowest index, so the empty history selects the first candidate.
SelectedModel select_model(const SufficientStatistics& stats, std::span<const double> candidates);

/// Adaptive state feedback using the currently selected decay value.
double minimax_control(double state, double selected_decay, double gain);

/// Distributed state feedback with the true decay value. Same formula as the
/// adaptive law; the two coincide exactly once the selection is correct.
double hinf_control(double state, double true_decay, double gain);

/// Distributed state feedback with a fixed admissible guess, never updated.
double nominal_control(double state, double nominal_decay, double gain);

/// One node's adaptive controller: its candidate list plus the statistics of
/// its own observed transitions. Deliberately blind to everything except the
/// node's own states and the coupling sums formed from neighbor controls.
class MinimaxNodeController {
public:
    MinimaxNodeController(std::vector<double> candidates, double gain)
        : candidates_(std::move(candidates)), gain_(gain) {}

    SelectedModel select() const { return select_model(stats_, candidates_); }

    double control(double state) const { return minimax_control(state, select().value, gain_); }

    void observe(double state, double coupling, double next_state) {
        stats_.add_transition(state, coupling, next_state, gain_);
    }

    const SufficientStatistics& statistics() const noexcept { return stats_; }
    const std::vector<double>& candidates() const noexcept { return candidates_; }

private:
    std::vector<double> candidates_;
    double gain_;
    SufficientStatistics stats_;
};

}  // namespace dmac
