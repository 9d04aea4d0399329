#include "dmac/disturbance.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "dmac/rng.hpp"

namespace dmac {

double generate(const DisturbanceSpec& spec, int t, int node) {
    if (t < 0) {
        throw Error(ErrorCategory::config, "disturbance step must be nonnegative");
    }
    const std::size_t k = static_cast<std::size_t>(node - 1);
    switch (spec.kind) {
        case DisturbanceKind::zero:
            return 0.0;
        case DisturbanceKind::sinusoid:
            return spec.sinusoid.amplitude.at(k) *
                   std::sin(spec.sinusoid.angular_frequency.at(k) * static_cast<double>(t) +
                            spec.sinusoid.phase.at(k));
        case DisturbanceKind::gaussian:
            return spec.gaussian_stddev *
                   rng::counter_normal(spec.gaussian_seed, static_cast<std::uint64_t>(t),
                                       static_cast<std::uint64_t>(node));
        case DisturbanceKind::file: {
            if (node < 1 || node > spec.file_columns || t >= spec.file_rows()) {
                throw Error(ErrorCategory::config,
                            "disturbance file has no value for node " + std::to_string(node) +
                                " at step " + std::to_string(t));
            }
            return spec.file_values[static_cast<std::size_t>(t) *
                                        static_cast<std::size_t>(spec.file_columns) +
                                    k];
        }
    }
    throw Error(ErrorCategory::config, "unknown disturbance kind");
}

DisturbanceSpec load_disturbance_file(const std::string& path, int node_count) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorCategory::io, "cannot open disturbance file " + path);
    }

    DisturbanceSpec spec;
    spec.kind = DisturbanceKind::file;
    spec.file_path = path;
    spec.file_columns = node_count;

    std::string line;
    int row = 0;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        std::istringstream fields(line);
        std::string token;
        int col = 0;
        while (std::getline(fields, token, ',')) {
            try {
                spec.file_values.push_back(std::stod(token));
            } catch (const std::exception&) {
                throw Error(ErrorCategory::config, "disturbance file " + path + " row " +
                                                       std::to_string(row + 1) +
                                                       ": not a number: '" + token + "'");
            }
            ++col;
        }
        if (col != node_count) {
            throw Error(ErrorCategory::config,
                        "disturbance file " + path + " row " + std::to_string(row + 1) + " has " +
                            std::to_string(col) + " columns, expected " +
                            std::to_string(node_count));
        }
        ++row;
    }
    return spec;
}

}  // namespace dmac
