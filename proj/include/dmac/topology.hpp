#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dmac/errors.hpp"

namespace dmac {

/// Undirected edge between two 1-based node ids. The (tail, head) order only
/// fixes the sign convention of the matching incidence column: -1 at the
/// tail, +1 at the head.
struct Edge {
    int tail = 0;
    int head = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Communication graph: undirected adjacency plus the oriented incidence
/// matrix. Node ids are 1-based throughout the public interface, matching the
/// configuration file format; edge columns are 0-based positions into
/// edges(). Immutable after construction.
class Topology {
public:
    Topology() = default;

    /// Validates and builds. Rejects self-loops, duplicate edges (regardless
    /// of orientation) and out-of-range ids, identifying the offending edge.
    static Topology build(std::vector<Edge> edges, int node_count);

    int node_count() const noexcept { return node_count_; }
    int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    /// Ascending neighbor ids of `node`.
    const std::vector<int>& neighbors(int node) const;
    int degree(int node) const;

    /// Incidence matrix entry: -1, 0 or +1.
    int incidence(int node, int edge_column) const;

    friend bool operator==(const Topology&, const Topology&) = default;

private:
    int node_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> neighbors_;  // per node, ascending
    std::vector<std::int8_t> incidence_;       // node-major, node_count x edge_count
};

/// Open interval of decay values compatible with the communication
/// constraint a^2 + 2 b^2 d < a at the given degree.
struct AdmissibleInterval {
    double lo = 0.0;
    double hi = 0.0;

    double width() const noexcept { return hi - lo; }
    double midpoint() const noexcept { return 0.5 * (lo + hi); }
    bool contains(double a) const noexcept { return a > lo && a < hi; }
};

/// Roots of a^2 - a + 2 b^2 d = 0 intersected with (0, 1). Throws an
/// admissibility error when 1 - 8 b^2 d <= 0 and no decay value works.
AdmissibleInterval admissible_interval(double coupling_gain, int degree);

/// True iff `decay` lies in (0, 1) and strictly satisfies the communication
/// constraint for this degree.
bool validate_model(double decay, double coupling_gain, int degree) noexcept;

/// Draws `model_count` distinct admissible decay values for a node of the
/// given degree: uniform over the admissible interval shrunk by `margin`
/// (a fraction of its width on each side), redrawn until every adjacent pair
/// is at least `min_separation` apart, returned ascending. Deterministic in
/// `seed`. A single-model request returns the interval midpoint.
std::vector<double> sample_model_set(std::uint64_t seed,
                                     double coupling_gain,
                                     int degree,
                                     int model_count,
                                     double min_separation = 0.02,
                                     double margin = 0.01);

}  // namespace dmac
