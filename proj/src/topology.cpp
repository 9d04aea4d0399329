#include "dmac/topology.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <utility>

#include "dmac/rng.hpp"

namespace dmac {

namespace {

std::string edge_text(int position, const Edge& e) {
    std::ostringstream out;
    out << "edge " << position + 1 << " (" << e.tail << "," << e.head << ")";
    return out.str();
}

}  // namespace

Topology Topology::build(std::vector<Edge> edges, int node_count) {
    if (node_count < 1) {
        throw Error(ErrorCategory::config, "node_count must be positive");
    }

    std::set<std::pair<int, int>> seen;
    for (std::size_t k = 0; k < edges.size(); ++k) {
        const Edge& e = edges[k];
        const int pos = static_cast<int>(k);
        if (e.tail < 1 || e.tail > node_count || e.head < 1 || e.head > node_count) {
            throw Error(ErrorCategory::config,
                        "node id out of range [1," + std::to_string(node_count) + "] at " +
                            edge_text(pos, e));
        }
        if (e.tail == e.head) {
            throw Error(ErrorCategory::config, "self-loop at " + edge_text(pos, e));
        }
        const auto key = std::minmax(e.tail, e.head);
        if (!seen.insert(key).second) {
            throw Error(ErrorCategory::config, "duplicate edge at " + edge_text(pos, e));
        }
    }

    Topology t;
    t.node_count_ = node_count;
    t.edges_ = std::move(edges);
    t.neighbors_.assign(static_cast<std::size_t>(node_count), {});
    t.incidence_.assign(static_cast<std::size_t>(node_count) * t.edges_.size(), 0);

    const std::size_t edge_count = t.edges_.size();
    for (std::size_t e = 0; e < edge_count; ++e) {
        const Edge& edge = t.edges_[e];
        t.neighbors_[static_cast<std::size_t>(edge.tail - 1)].push_back(edge.head);
        t.neighbors_[static_cast<std::size_t>(edge.head - 1)].push_back(edge.tail);
        t.incidence_[static_cast<std::size_t>(edge.tail - 1) * edge_count + e] = -1;
        t.incidence_[static_cast<std::size_t>(edge.head - 1) * edge_count + e] = +1;
    }
    for (auto& list : t.neighbors_) {
        std::sort(list.begin(), list.end());
    }
    return t;
}

const std::vector<int>& Topology::neighbors(int node) const {
    return neighbors_.at(static_cast<std::size_t>(node - 1));
}

int Topology::degree(int node) const {
    return static_cast<int>(neighbors(node).size());
}

int Topology::incidence(int node, int edge_column) const {
    if (node < 1 || node > node_count_ || edge_column < 0 || edge_column >= edge_count()) {
        throw Error(ErrorCategory::config, "incidence index out of range");
    }
    return incidence_[static_cast<std::size_t>(node - 1) * edges_.size() +
                      static_cast<std::size_t>(edge_column)];
}

AdmissibleInterval admissible_interval(double coupling_gain, int degree) {
    if (!(coupling_gain > 0.0)) {
        throw Error(ErrorCategory::config, "coupling gain must be positive");
    }
    if (degree < 0) {
        throw Error(ErrorCategory::config, "degree must be nonnegative");
    }
    const double discriminant =
        1.0 - 8.0 * coupling_gain * coupling_gain * static_cast<double>(degree);
    if (!(discriminant > 0.0)) {
        std::ostringstream out;
        out << "communication constraint unsatisfiable: no decay value in (0,1) works for "
               "coupling gain "
            << coupling_gain << " at degree " << degree;
        throw Error(ErrorCategory::admissibility, out.str());
    }
    const double root = std::sqrt(discriminant);
    return AdmissibleInterval{0.5 * (1.0 - root), 0.5 * (1.0 + root)};
}

bool validate_model(double decay, double coupling_gain, int degree) noexcept {
    if (!(decay > 0.0 && decay < 1.0)) {
        return false;
    }
    const double quadratic =
        decay * decay + 2.0 * coupling_gain * coupling_gain * static_cast<double>(degree);
    return quadratic < decay;
}

std::vector<double> sample_model_set(std::uint64_t seed,
                                     double coupling_gain,
                                     int degree,
                                     int model_count,
                                     double min_separation,
                                     double margin) {
    if (model_count < 1) {
        throw Error(ErrorCategory::config, "model count must be at least 1");
    }
    if (min_separation < 0.0) {
        throw Error(ErrorCategory::config, "min_separation must be nonnegative");
    }
    if (!(margin >= 0.0 && margin < 0.5)) {
        throw Error(ErrorCategory::config, "margin must lie in [0, 0.5)");
    }

    const AdmissibleInterval interval = admissible_interval(coupling_gain, degree);
    const double shrink = margin * interval.width();
    const double lo = interval.lo + shrink;
    const double hi = interval.hi - shrink;

    if (model_count == 1) {
        return {interval.midpoint()};
    }

    const double usable = hi - lo;
    const double required = static_cast<double>(model_count - 1) * min_separation;
    if (usable <= required) {
        std::ostringstream out;
        out << "cannot place " << model_count << " values separated by " << min_separation
            << " inside (" << lo << "," << hi << ")";
        throw Error(ErrorCategory::capacity, out.str());
    }

    rng::Stream stream(seed);
    constexpr int max_attempts = 10000;
    std::vector<double> values(static_cast<std::size_t>(model_count));
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        for (auto& v : values) {
            v = stream.next_in(lo, hi);
        }
        std::sort(values.begin(), values.end());
        bool ok = true;
        for (std::size_t k = 0; ok && k + 1 < values.size(); ++k) {
            const double gap = values[k + 1] - values[k];
            ok = min_separation > 0.0 ? gap >= min_separation : gap > 0.0;
        }
        for (std::size_t k = 0; ok && k < values.size(); ++k) {
            ok = validate_model(values[k], coupling_gain, degree);
        }
        if (ok) {
            return values;
        }
    }
    std::ostringstream out;
    out << "separation " << min_separation << " too tight for " << model_count << " values in ("
        << lo << "," << hi << ")";
    throw Error(ErrorCategory::capacity, out.str());
}

}  // namespace dmac
