#include <array>
#include <cmath>
#include <random>

#include "dmac/topology.hpp"
#include "doctest.h"
#include "test_support.hpp"

using dmac::AdmissibleInterval;
using dmac::Edge;
using dmac::Error;
using dmac::Topology;

TEST_CASE("two-node graph: incidence column and adjacency") {
    const Topology t = Topology::build({{1, 2}}, 2);
    CHECK(t.node_count() == 2);
    CHECK(t.edge_count() == 1);
    CHECK(t.incidence(1, 0) == -1);
    CHECK(t.incidence(2, 0) == +1);
    CHECK(t.neighbors(1) == std::vector<int>{2});
    CHECK(t.neighbors(2) == std::vector<int>{1});
    CHECK(t.degree(1) == 1);
}

TEST_CASE("seven-node buffer network matches the displayed incidence matrix") {
    const Topology t = Topology::build({{1, 2}, {2, 3}, {2, 4}, {3, 5}, {4, 6}, {4, 7}}, 7);

    constexpr std::array<std::array<int, 6>, 7> expected = {{
        {-1, 0, 0, 0, 0, 0},
        {+1, -1, -1, 0, 0, 0},
        {0, +1, 0, -1, 0, 0},
        {0, 0, +1, 0, -1, -1},
        {0, 0, 0, +1, 0, 0},
        {0, 0, 0, 0, +1, 0},
        {0, 0, 0, 0, 0, +1},
    }};
    for (int node = 1; node <= 7; ++node) {
        for (int e = 0; e < 6; ++e) {
            CAPTURE(node);
            CAPTURE(e);
            CHECK(t.incidence(node, e) ==
                  expected[static_cast<std::size_t>(node - 1)][static_cast<std::size_t>(e)]);
        }
    }

    constexpr std::array<int, 7> degrees = {1, 3, 2, 3, 1, 1, 1};
    for (int node = 1; node <= 7; ++node) {
        CHECK(t.degree(node) == degrees[static_cast<std::size_t>(node - 1)]);
    }
}

TEST_CASE("build rejects malformed edge lists") {
    CHECK_THROWS_WITH_AS(Topology::build({{1, 2}, {1, 2}}, 2),
                         doctest::Contains("duplicate edge at edge 2 (1,2)"), Error);
    CHECK_THROWS_WITH_AS(Topology::build({{1, 2}, {2, 1}}, 2),
                         doctest::Contains("duplicate edge"), Error);
    CHECK_THROWS_WITH_AS(Topology::build({{2, 2}}, 3), doctest::Contains("self-loop"), Error);
    CHECK_THROWS_WITH_AS(Topology::build({{1, 4}}, 3), doctest::Contains("out of range"), Error);
    CHECK_THROWS_AS(Topology::build({}, 0), Error);
}

TEST_CASE("incidence row nonzero count equals degree on random graphs") {
    std::mt19937_64 engine(2024);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = testsupport::uniform_int(engine, 2, 12);
        const Topology t = testsupport::random_graph(engine, n);
        for (int node = 1; node <= n; ++node) {
            int nonzero = 0;
            for (int e = 0; e < t.edge_count(); ++e) {
                if (t.incidence(node, e) != 0) {
                    ++nonzero;
                }
            }
            CHECK(nonzero == t.degree(node));
        }
        // every column has exactly one +1 and one -1
        for (int e = 0; e < t.edge_count(); ++e) {
            int plus = 0;
            int minus = 0;
            for (int node = 1; node <= n; ++node) {
                plus += t.incidence(node, e) == +1;
                minus += t.incidence(node, e) == -1;
            }
            CHECK(plus == 1);
            CHECK(minus == 1);
        }
        // symmetric adjacency
        for (int node = 1; node <= n; ++node) {
            for (int j : t.neighbors(node)) {
                const auto& back = t.neighbors(j);
                CHECK(std::find(back.begin(), back.end(), node) != back.end());
            }
        }
    }
}

TEST_CASE("admissible interval: degree 0 reduces to (0,1)") {
    const AdmissibleInterval interval = dmac::admissible_interval(0.1, 0);
    CHECK(interval.lo == 0.0);
    CHECK(interval.hi == 1.0);
}

TEST_CASE("admissible interval endpoints agree with the grid-scan oracle") {
    for (int degree : {0, 1, 2, 3}) {
        CAPTURE(degree);
        const AdmissibleInterval interval = dmac::admissible_interval(0.1, degree);
        const auto scan = testsupport::grid_scan_admissible(0.1, degree);
        REQUIRE_FALSE(scan.empty);
        // one grid step of slack, padded for the grid points' own rounding
        CHECK(std::abs(scan.lo - interval.lo) <= 1e-6 * (1.0 + 1e-9));
        CHECK(std::abs(scan.hi - interval.hi) <= 1e-6 * (1.0 + 1e-9));
    }
    // frozen closed-form roots, verified against the oracle above
    const AdmissibleInterval d3 = dmac::admissible_interval(0.1, 3);
    CHECK(std::abs(d3.lo - 0.0641101056459326) <= 1e-9);
    CHECK(std::abs(d3.hi - 0.9358898943540674) <= 1e-9);
    const AdmissibleInterval d1 = dmac::admissible_interval(0.1, 1);
    CHECK(std::abs(d1.lo - 0.0204168476687281) <= 1e-9);
    CHECK(std::abs(d1.hi - 0.9795831523312719) <= 1e-9);
}

TEST_CASE("admissible interval is empty when the constraint cannot hold") {
    // 8 b^2 d >= 1 at b=0.2, d=4
    CHECK_THROWS_WITH_AS(dmac::admissible_interval(0.2, 4), doctest::Contains("unsatisfiable"),
                         Error);
    CHECK_THROWS_AS(dmac::admissible_interval(-0.1, 1), Error);
}

TEST_CASE("validate_model hand-checked cases") {
    CHECK(dmac::validate_model(0.5, 0.1, 3));        // 0.25 + 0.06 < 0.5
    CHECK_FALSE(dmac::validate_model(0.95, 0.1, 3)); // 0.9025 + 0.06 > 0.95
    CHECK_FALSE(dmac::validate_model(1.0, 0.1, 0));
    CHECK_FALSE(dmac::validate_model(0.0, 0.1, 0));
    CHECK_FALSE(dmac::validate_model(-0.2, 0.05, 1));
}

TEST_CASE("validate_model flips exactly at the interval endpoints") {
    for (double gain : {0.05, 0.1, 0.15}) {
        for (int degree : {0, 1, 2, 3, 5}) {
            if (1.0 - 8.0 * gain * gain * degree <= 0.0) {
                continue;
            }
            CAPTURE(gain);
            CAPTURE(degree);
            const AdmissibleInterval interval = dmac::admissible_interval(gain, degree);
            const double eps = 1e-9 * interval.width();
            CHECK(dmac::validate_model(interval.lo + eps, gain, degree));
            CHECK(dmac::validate_model(interval.hi - eps, gain, degree));
            CHECK_FALSE(dmac::validate_model(interval.lo - eps, gain, degree));
            CHECK_FALSE(dmac::validate_model(interval.hi + eps, gain, degree));
        }
    }
}

TEST_CASE("sample_model_set: membership, separation, order, determinism") {
    const auto values = dmac::sample_model_set(77, 0.1, 3, 5);
    REQUIRE(values.size() == 5);
    const AdmissibleInterval interval = dmac::admissible_interval(0.1, 3);
    for (double v : values) {
        CHECK(interval.contains(v));
        CHECK(dmac::validate_model(v, 0.1, 3));
    }
    for (std::size_t k = 0; k + 1 < values.size(); ++k) {
        CHECK(values[k + 1] - values[k] >= 0.02);
    }
    CHECK(dmac::sample_model_set(77, 0.1, 3, 5) == values);
    CHECK(dmac::sample_model_set(78, 0.1, 3, 5) != values);
}

TEST_CASE("sample_model_set: singleton request returns the interval midpoint") {
    const auto values = dmac::sample_model_set(5, 0.1, 3, 1, 0.0);
    REQUIRE(values.size() == 1);
    CHECK(values[0] == dmac::admissible_interval(0.1, 3).midpoint());
}

TEST_CASE("sample_model_set: infeasible separation is a capacity error") {
    // degree-3 interval is ~0.87 wide; 5 values 0.3 apart need 1.2
    CHECK_THROWS_WITH_AS(dmac::sample_model_set(1, 0.1, 3, 5, 0.3),
                         doctest::Contains("cannot place"), Error);
    CHECK_THROWS_AS(dmac::sample_model_set(1, 0.1, 3, 0), Error);
}
