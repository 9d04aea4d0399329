#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dmac/errors.hpp"

namespace dmac {

enum class DisturbanceKind { zero, sinusoid, gaussian, file };

/// Per-node sinusoid parameters; all vectors sized node_count.
struct SinusoidParams {
    std::vector<double> amplitude;
    std::vector<double> angular_frequency;  // radians per step
    std::vector<double> phase;              // radians

    friend bool operator==(const SinusoidParams&, const SinusoidParams&) = default;
};

/// Disturbance signal description. The file kind carries its values inline
/// (loaded when the scenario is resolved) so that generation stays a pure
/// function.
struct DisturbanceSpec {
    DisturbanceKind kind = DisturbanceKind::zero;
    SinusoidParams sinusoid;
    double gaussian_stddev = 0.0;
    std::uint64_t gaussian_seed = 0;
    std::string file_path;
    int file_columns = 0;
    std::vector<double> file_values;  // row-major, one row per step

    int file_rows() const noexcept {
        return file_columns > 0 ? static_cast<int>(file_values.size()) / file_columns : 0;
    }

    friend bool operator==(const DisturbanceSpec&, const DisturbanceSpec&) = default;
};

/// Disturbance hitting a 1-based node at step t. Pure in all arguments: the
/// gaussian kind is counter-based, so query order is irrelevant.
double generate(const DisturbanceSpec& spec, int t, int node);

/// Reads a plain-decimal CSV table of disturbance values (one row per step,
/// one column per node) into the spec.
DisturbanceSpec load_disturbance_file(const std::string& path, int node_count);

}  // namespace dmac
