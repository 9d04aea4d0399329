#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "dmac/scenario.hpp"

namespace dmac {

/// Parses a JSON scenario document into a fully resolved ScenarioConfig:
/// sampled model sets are expanded from the master seed, the nominal decay
/// values are resolved (interval midpoints unless given), and every model is
/// checked against the communication constraint. `seed_override` replaces the
/// document's seed before any sampling happens. `base_dir` anchors relative
/// disturbance file paths.
ScenarioConfig parse_config(const std::string& text,
                            std::optional<std::uint64_t> seed_override = {},
                            const std::filesystem::path& base_dir = {});

/// parse_config on a file's contents, with paths resolved next to it.
ScenarioConfig parse_config_file(const std::filesystem::path& path,
                                 std::optional<std::uint64_t> seed_override = {});

/// Serializes a resolved config back to its JSON document form; models are
/// always written explicitly. parse_config(serialize_config(c)) == c.
std::string serialize_config(const ScenarioConfig& config);

/// The built-in 7-node buffer-network experiment: coupling gain 0.1, five
/// candidate models per node sampled from the seed, horizon 30, one sinusoid
/// per node, all three controllers, midpoint nominal values.
ScenarioConfig paper_preset(std::uint64_t seed);

}  // namespace dmac
