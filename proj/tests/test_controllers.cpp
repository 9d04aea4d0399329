#include <cmath>
#include <random>
#include <vector>

#include "dmac/controllers.hpp"
#include "doctest.h"
#include "test_support.hpp"

using dmac::SelectedModel;
using dmac::SufficientStatistics;

namespace {

/// Batch oracle: re-evaluates the summed squared prediction error directly
/// from a stored transition history.
struct Transition {
    double state;
    double coupling;
    double next_state;
};

double batch_residual(const std::vector<Transition>& history, double decay, double gain) {
    double total = 0.0;
    for (const Transition& tr : history) {
        const double err = decay * tr.state + gain * tr.coupling - tr.next_state;
        total += err * err;
    }
    return total;
}

}  // namespace

TEST_CASE("add_transition hand-checked coefficients") {
    SufficientStatistics stats;
    stats.add_transition(1.0, 0.0, 0.7, 0.1);
    CHECK(stats.quad == doctest::Approx(1.0));
    CHECK(stats.cross == doctest::Approx(-0.7));
    CHECK(stats.offset == doctest::Approx(0.49));
    CHECK(stats.samples == 1);
}

TEST_CASE("zero-state transition carries no model information") {
    SufficientStatistics stats;
    stats.add_transition(0.0, 0.5, 1.25, 0.1);
    CHECK(stats.quad == 0.0);
    CHECK(stats.cross == 0.0);
    CHECK(stats.offset == doctest::Approx((0.05 - 1.25) * (0.05 - 1.25)));
    // every candidate scores the same, so selection cannot move
    CHECK(stats.residual(0.2) == stats.residual(0.9));
}

TEST_CASE("incremental residual matches the batch oracle over random histories") {
    std::mt19937_64 engine(61);
    for (int trial = 0; trial < 20; ++trial) {
        const double gain = testsupport::uniform_in(engine, 0.05, 0.3);
        SufficientStatistics stats;
        std::vector<Transition> history;
        for (int t = 0; t < 30; ++t) {
            Transition tr{testsupport::uniform_in(engine, -2.0, 2.0),
                          testsupport::uniform_in(engine, -3.0, 3.0),
                          testsupport::uniform_in(engine, -2.0, 2.0)};
            stats.add_transition(tr.state, tr.coupling, tr.next_state, gain);
            history.push_back(tr);
        }
        for (int k = 0; k < 100; ++k) {
            const double decay = testsupport::uniform_in(engine, 0.0, 1.0);
            const double expected = batch_residual(history, decay, gain);
            CHECK(stats.residual(decay) == doctest::Approx(expected).epsilon(1e-9));
        }
    }
}

TEST_CASE("residual hand-checked values and empty-history case") {
    SufficientStatistics stats;
    stats.quad = 1.0;
    stats.cross = -0.7;
    stats.offset = 0.49;
    stats.samples = 1;
    CHECK(stats.residual(0.7) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(stats.residual(0.3) == doctest::Approx(0.16));

    const SufficientStatistics empty;
    CHECK(empty.residual(0.1) == 0.0);
    CHECK(empty.residual(0.9) == 0.0);
}

TEST_CASE("residual clamps tiny negative rounding to zero, never below") {
    SufficientStatistics stats;
    stats.quad = 1.0;
    stats.cross = -0.5 - 1e-14;  // forces a slightly negative quadratic minimum
    stats.offset = 0.25;
    const double at_vertex = stats.residual(0.5);
    CHECK(at_vertex >= 0.0);

    std::mt19937_64 engine(71);
    for (int trial = 0; trial < 200; ++trial) {
        SufficientStatistics s;
        for (int t = 0; t < 5; ++t) {
            s.add_transition(testsupport::uniform_in(engine, -1.0, 1.0),
                             testsupport::uniform_in(engine, -1.0, 1.0),
                             testsupport::uniform_in(engine, -1.0, 1.0), 0.1);
        }
        CHECK(s.residual(testsupport::uniform_in(engine, 0.0, 1.0)) >= 0.0);
    }
}

TEST_CASE("select_model: argmin with lowest-index tie break") {
    SufficientStatistics stats;
    stats.quad = 1.0;
    stats.cross = -0.7;
    stats.offset = 0.49;
    stats.samples = 1;
    const std::vector<double> candidates = {0.3, 0.7, 0.9};
    const SelectedModel chosen = dmac::select_model(stats, candidates);
    CHECK(chosen.value == 0.7);
    CHECK(chosen.index == 2);
    CHECK(chosen.residual == doctest::Approx(0.0).epsilon(1e-15));

    // empty history: all residuals zero, lowest index wins
    const SufficientStatistics empty;
    const SelectedModel first = dmac::select_model(empty, std::vector<double>{0.3, 0.7});
    CHECK(first.value == 0.3);
    CHECK(first.index == 1);

    // singleton list regardless of statistics
    const SelectedModel sole = dmac::select_model(stats, std::vector<double>{0.42});
    CHECK(sole.value == 0.42);

    CHECK_THROWS_AS(dmac::select_model(stats, std::vector<double>{}), dmac::Error);
}

TEST_CASE("select_model is optimal against brute force on random statistics") {
    std::mt19937_64 engine(81);
    for (int trial = 0; trial < 100; ++trial) {
        SufficientStatistics stats;
        for (int t = 0; t < 12; ++t) {
            stats.add_transition(testsupport::uniform_in(engine, -2.0, 2.0),
                                 testsupport::uniform_in(engine, -2.0, 2.0),
                                 testsupport::uniform_in(engine, -2.0, 2.0), 0.1);
        }
        const int count = testsupport::uniform_int(engine, 1, 8);
        std::vector<double> candidates;
        for (int k = 0; k < count; ++k) {
            candidates.push_back(testsupport::uniform_in(engine, 0.01, 0.99));
        }
        std::sort(candidates.begin(), candidates.end());

        const SelectedModel chosen = dmac::select_model(stats, candidates);
        for (double c : candidates) {
            CHECK(chosen.residual <= stats.residual(c));
        }
    }
}

TEST_CASE("control laws: hand-checked values and the origin") {
    CHECK(dmac::minimax_control(0.0, 0.7, 0.1) == 0.0);
    CHECK(dmac::minimax_control(1.0, 0.5, 0.1) == doctest::Approx(-0.2));
    CHECK(dmac::minimax_control(2.0, 0.9, 0.1) == doctest::Approx(-2.0));
    CHECK(dmac::hinf_control(1.0, 0.5, 0.1) == doctest::Approx(-0.2));
    CHECK(dmac::nominal_control(1.0, 0.5, 0.1) == doctest::Approx(-0.2));
    CHECK_THROWS_AS(dmac::minimax_control(1.0, 1.0, 0.1), dmac::Error);
}

TEST_CASE("adaptive and true-model feedback laws coincide bit for bit") {
    std::mt19937_64 engine(91);
    for (int trial = 0; trial < 1000; ++trial) {
        const double state = testsupport::uniform_in(engine, -10.0, 10.0);
        const double decay = testsupport::uniform_in(engine, 1e-6, 1.0 - 1e-6);
        const double gain = testsupport::uniform_in(engine, 0.01, 0.5);
        CHECK(dmac::minimax_control(state, decay, gain) ==
              dmac::hinf_control(state, decay, gain));
        CHECK(dmac::minimax_control(state, decay, gain) ==
              dmac::nominal_control(state, decay, gain));
    }
}

TEST_CASE("one noise-free transition pins the true model") {
    std::mt19937_64 engine(101);
    for (int trial = 0; trial < 50; ++trial) {
        const double gain = 0.1;
        std::vector<double> candidates;
        double prev = testsupport::uniform_in(engine, 0.05, 0.2);
        for (int k = 0; k < 5; ++k) {
            candidates.push_back(prev);
            prev += testsupport::uniform_in(engine, 0.05, 0.15);
        }
        const int truth_index = testsupport::uniform_int(engine, 0, 4);
        const double truth = candidates[static_cast<std::size_t>(truth_index)];

        const double state = testsupport::uniform_in(engine, 0.5, 2.0);  // nonzero
        const double coupling = testsupport::uniform_in(engine, -1.0, 1.0);
        const double next_state = truth * state + gain * coupling;  // no disturbance

        SufficientStatistics stats;
        stats.add_transition(state, coupling, next_state, gain);

        // the true model fits to rounding; every other candidate is separated
        // by (decay - truth)^2 * state^2
        const double scale = std::max(stats.quad, stats.offset);
        CHECK(stats.residual(truth) <= 1e-12 * scale);
        for (double c : candidates) {
            if (c == truth) {
                continue;
            }
            const double expected = (c - truth) * (c - truth) * state * state;
            CHECK(stats.residual(c) == doctest::Approx(expected).epsilon(1e-9));
            CHECK(stats.residual(c) > stats.residual(truth));
        }
        CHECK(dmac::select_model(stats, candidates).value == truth);
    }
}

TEST_CASE("scaling the history scales residuals by lambda^2 and keeps the argmin") {
    std::mt19937_64 engine(111);
    for (int trial = 0; trial < 30; ++trial) {
        const double gain = 0.1;
        const double lambda = testsupport::uniform_in(engine, 0.2, 5.0);
        SufficientStatistics base;
        SufficientStatistics scaled;
        for (int t = 0; t < 10; ++t) {
            const double state = testsupport::uniform_in(engine, -2.0, 2.0);
            const double coupling = testsupport::uniform_in(engine, -2.0, 2.0);
            const double next_state = testsupport::uniform_in(engine, -2.0, 2.0);
            base.add_transition(state, coupling, next_state, gain);
            scaled.add_transition(lambda * state, lambda * coupling, lambda * next_state, gain);
        }
        const std::vector<double> candidates = {0.1, 0.35, 0.6, 0.85};
        for (double c : candidates) {
            CHECK(scaled.residual(c) ==
                  doctest::Approx(lambda * lambda * base.residual(c)).epsilon(1e-9));
        }
        CHECK(dmac::select_model(base, candidates).index ==
              dmac::select_model(scaled, candidates).index);
    }
}
