#include "dmac/config.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

#include "dmac/rng.hpp"
#include "json.hpp"

namespace dmac {

namespace {

using nlohmann::json;

[[noreturn]] void schema_error(const std::string& message) {
    throw Error(ErrorCategory::config, "config: " + message);
}

void expect_object(const json& j, const std::string& where) {
    if (!j.is_object()) {
        schema_error(where + " must be an object");
    }
}

void reject_unknown_keys(const json& j, const std::string& where,
                         std::initializer_list<const char*> allowed) {
    for (const auto& item : j.items()) {
        bool known = false;
        for (const char* key : allowed) {
            if (item.key() == key) {
                known = true;
                break;
            }
        }
        if (!known) {
            schema_error(where + ": unknown key '" + item.key() + "'");
        }
    }
}

double number_at(const json& j, const std::string& where) {
    if (!j.is_number()) {
        schema_error(where + " must be a number");
    }
    return j.get<double>();
}

int int_at(const json& j, const std::string& where) {
    if (!j.is_number_integer()) {
        schema_error(where + " must be an integer");
    }
    return j.get<int>();
}

/// Accepts a scalar (broadcast) or an array of exactly node_count numbers.
std::vector<double> per_node_values(const json& j, int node_count, const std::string& where) {
    std::vector<double> values;
    if (j.is_number()) {
        values.assign(static_cast<std::size_t>(node_count), j.get<double>());
        return values;
    }
    if (!j.is_array() || static_cast<int>(j.size()) != node_count) {
        schema_error(where + " must be a number or an array of " + std::to_string(node_count) +
                     " numbers");
    }
    values.reserve(j.size());
    for (const auto& entry : j) {
        values.push_back(number_at(entry, where + " entry"));
    }
    return values;
}

Topology parse_graph(const json& j) {
    expect_object(j, "graph");
    reject_unknown_keys(j, "graph", {"node_count", "edges"});
    if (!j.contains("node_count") || !j.contains("edges")) {
        schema_error("graph needs node_count and edges");
    }
    const int node_count = int_at(j["node_count"], "graph.node_count");
    if (!j["edges"].is_array()) {
        schema_error("graph.edges must be an array of [tail, head] pairs");
    }
    std::vector<Edge> edges;
    edges.reserve(j["edges"].size());
    for (const auto& entry : j["edges"]) {
        if (!entry.is_array() || entry.size() != 2) {
            schema_error("graph.edges entries must be [tail, head] pairs");
        }
        edges.push_back(Edge{int_at(entry[0], "edge tail"), int_at(entry[1], "edge head")});
    }
    return Topology::build(std::move(edges), node_count);
}

struct SamplingSpec {
    int count = 0;
    double min_separation = 0.02;
    double margin = 0.01;
};

// Child-seed streams per node: 2*node feeds the candidate draw, 2*node + 1
// the true-model pick. Shared by sampled configs and the built-in preset.
void expand_sampled_models(ModelSet& models,
                           const Topology& topology,
                           const SamplingSpec& spec,
                           std::uint64_t seed) {
    const int n = topology.node_count();
    models.candidates.resize(static_cast<std::size_t>(n));
    models.true_index.resize(static_cast<std::size_t>(n));
    for (int node = 1; node <= n; ++node) {
        const std::size_t k = static_cast<std::size_t>(node - 1);
        models.candidates[k] =
            sample_model_set(rng::derive(seed, static_cast<std::uint64_t>(2 * node)),
                             models.coupling_gain, topology.degree(node), spec.count,
                             spec.min_separation, spec.margin);
        rng::Stream truth(rng::derive(seed, static_cast<std::uint64_t>(2 * node + 1)));
        models.true_index[k] =
            1 + static_cast<int>(truth.next_below(static_cast<std::uint64_t>(spec.count)));
    }
}

void parse_models(const json& j,
                  ScenarioConfig& config,
                  std::uint64_t seed) {
    expect_object(j, "models");
    reject_unknown_keys(j, "models", {"nodes", "sample"});
    const bool has_nodes = j.contains("nodes");
    const bool has_sample = j.contains("sample");
    if (has_nodes == has_sample) {
        schema_error("models needs exactly one of 'nodes' or 'sample'");
    }

    const int n = config.topology.node_count();
    if (has_sample) {
        const json& s = j["sample"];
        expect_object(s, "models.sample");
        reject_unknown_keys(s, "models.sample", {"count", "min_separation", "margin"});
        if (!s.contains("count")) {
            schema_error("models.sample needs count");
        }
        SamplingSpec spec;
        spec.count = int_at(s["count"], "models.sample.count");
        if (s.contains("min_separation")) {
            spec.min_separation = number_at(s["min_separation"], "models.sample.min_separation");
        }
        if (s.contains("margin")) {
            spec.margin = number_at(s["margin"], "models.sample.margin");
        }
        expand_sampled_models(config.models, config.topology, spec, seed);
        return;
    }

    const json& nodes = j["nodes"];
    if (!nodes.is_array() || static_cast<int>(nodes.size()) != n) {
        schema_error("models.nodes must list one entry per node (" + std::to_string(n) + ")");
    }
    for (int node = 1; node <= n; ++node) {
        const json& entry = nodes[static_cast<std::size_t>(node - 1)];
        expect_object(entry, "models.nodes entry");
        reject_unknown_keys(entry, "models.nodes entry", {"candidates", "true_index"});
        if (!entry.contains("candidates") || !entry.contains("true_index")) {
            schema_error("models.nodes entries need candidates and true_index");
        }
        if (!entry["candidates"].is_array() || entry["candidates"].empty()) {
            schema_error("node " + std::to_string(node) + ": candidates must be a nonempty array");
        }
        std::vector<double> candidates;
        candidates.reserve(entry["candidates"].size());
        for (const auto& value : entry["candidates"]) {
            candidates.push_back(number_at(value, "candidate"));
        }
        config.models.candidates.push_back(std::move(candidates));
        config.models.true_index.push_back(int_at(entry["true_index"], "true_index"));
    }
}

DisturbanceSpec parse_disturbance(const json& j, int node_count,
                                  const std::filesystem::path& base_dir) {
    DisturbanceSpec spec;
    if (j.is_null()) {
        return spec;  // defaults to zero
    }
    expect_object(j, "disturbance");
    if (!j.contains("kind") || !j["kind"].is_string()) {
        schema_error("disturbance needs a string 'kind'");
    }
    const std::string kind = j["kind"].get<std::string>();
    if (kind == "zero") {
        reject_unknown_keys(j, "disturbance", {"kind"});
        spec.kind = DisturbanceKind::zero;
    } else if (kind == "sinusoid") {
        reject_unknown_keys(j, "disturbance", {"kind", "amplitude", "angular_frequency", "phase"});
        if (!j.contains("amplitude") || !j.contains("angular_frequency")) {
            schema_error("sinusoid disturbance needs amplitude and angular_frequency");
        }
        spec.kind = DisturbanceKind::sinusoid;
        spec.sinusoid.amplitude =
            per_node_values(j["amplitude"], node_count, "disturbance.amplitude");
        spec.sinusoid.angular_frequency =
            per_node_values(j["angular_frequency"], node_count, "disturbance.angular_frequency");
        spec.sinusoid.phase =
            j.contains("phase")
                ? per_node_values(j["phase"], node_count, "disturbance.phase")
                : std::vector<double>(static_cast<std::size_t>(node_count), 0.0);
    } else if (kind == "gaussian") {
        reject_unknown_keys(j, "disturbance", {"kind", "stddev", "seed"});
        if (!j.contains("stddev")) {
            schema_error("gaussian disturbance needs stddev");
        }
        spec.kind = DisturbanceKind::gaussian;
        spec.gaussian_stddev = number_at(j["stddev"], "disturbance.stddev");
        if (j.contains("seed")) {
            if (!j["seed"].is_number_integer()) {
                schema_error("disturbance.seed must be an integer");
            }
            spec.gaussian_seed = j["seed"].get<std::uint64_t>();
        }
    } else if (kind == "file") {
        reject_unknown_keys(j, "disturbance", {"kind", "path"});
        if (!j.contains("path") || !j["path"].is_string()) {
            schema_error("file disturbance needs a string path");
        }
        std::filesystem::path path = j["path"].get<std::string>();
        const std::filesystem::path resolved =
            (path.is_absolute() || base_dir.empty()) ? path : base_dir / path;
        spec = load_disturbance_file(resolved.string(), node_count);
        spec.file_path = path.string();  // keep the document's spelling for round-trips
    } else {
        schema_error("unknown disturbance kind '" + kind + "'");
    }
    return spec;
}

std::vector<ControllerKind> parse_controllers(const json& j) {
    const std::vector<ControllerKind> all = {ControllerKind::minimax, ControllerKind::oracle,
                                             ControllerKind::nominal};
    if (j.is_null()) {
        return all;
    }
    if (!j.is_array() || j.empty()) {
        schema_error("controllers must be a nonempty array of names");
    }
    std::vector<ControllerKind> selected;
    for (const auto& entry : j) {
        if (!entry.is_string()) {
            schema_error("controllers entries must be strings");
        }
        const std::string name = entry.get<std::string>();
        if (name == "all") {
            return all;
        }
        const auto kind = controller_from_string(name);
        if (!kind) {
            schema_error("unknown controller '" + name + "'");
        }
        selected.push_back(*kind);
    }
    return selected;
}

std::vector<double> resolve_nominal(const json& j, const ScenarioConfig& config) {
    const int n = config.topology.node_count();
    const auto midpoints = [&config, n]() {
        std::vector<double> values;
        values.reserve(static_cast<std::size_t>(n));
        for (int node = 1; node <= n; ++node) {
            values.push_back(
                admissible_interval(config.coupling_gain(), config.topology.degree(node))
                    .midpoint());
        }
        return values;
    };
    if (j.is_null()) {
        return midpoints();
    }
    expect_object(j, "nominal");
    reject_unknown_keys(j, "nominal", {"a"});
    if (!j.contains("a")) {
        schema_error("nominal needs 'a'");
    }
    if (j["a"].is_string()) {
        if (j["a"].get<std::string>() != "midpoint") {
            schema_error("nominal.a must be 'midpoint' or per-node numbers");
        }
        return midpoints();
    }
    return per_node_values(j["a"], n, "nominal.a");
}

}  // namespace

ScenarioConfig parse_config(const std::string& text,
                            std::optional<std::uint64_t> seed_override,
                            const std::filesystem::path& base_dir) {
    json document;
    try {
        document = json::parse(text);
    } catch (const json::exception& e) {
        schema_error(std::string("not valid JSON: ") + e.what());
    }
    expect_object(document, "document");
    reject_unknown_keys(document, "document",
                        {"graph", "system", "models", "disturbance", "controllers", "nominal",
                         "seed"});
    for (const char* required : {"graph", "system", "models"}) {
        if (!document.contains(required)) {
            schema_error(std::string("missing section '") + required + "'");
        }
    }

    ScenarioConfig config;
    config.topology = parse_graph(document["graph"]);
    const int n = config.topology.node_count();

    const json& system = document["system"];
    expect_object(system, "system");
    reject_unknown_keys(system, "system", {"b", "horizon", "initial_state"});
    if (!system.contains("b") || !system.contains("horizon")) {
        schema_error("system needs b and horizon");
    }
    config.models.coupling_gain = number_at(system["b"], "system.b");
    config.horizon = int_at(system["horizon"], "system.horizon");
    config.initial_state =
        system.contains("initial_state")
            ? per_node_values(system["initial_state"], n, "system.initial_state")
            : std::vector<double>(static_cast<std::size_t>(n), 1.0);

    if (document.contains("seed")) {
        if (!document["seed"].is_number_integer()) {
            schema_error("seed must be an integer");
        }
        config.seed = document["seed"].get<std::uint64_t>();
    }
    if (seed_override) {
        config.seed = *seed_override;
    }

    parse_models(document["models"], config, config.seed);
    config.disturbance =
        parse_disturbance(document.value("disturbance", json()), n, base_dir);
    config.controllers = parse_controllers(document.value("controllers", json()));
    config.nominal_decay = resolve_nominal(document.value("nominal", json()), config);

    validate(config);
    return config;
}

ScenarioConfig parse_config_file(const std::filesystem::path& path,
                                 std::optional<std::uint64_t> seed_override) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorCategory::io, "cannot open config file " + path.string());
    }
    std::ostringstream text;
    text << in.rdbuf();
    return parse_config(text.str(), seed_override, path.parent_path());
}

std::string serialize_config(const ScenarioConfig& config) {
    json document;

    json edges = json::array();
    for (const Edge& e : config.topology.edges()) {
        edges.push_back(json::array({e.tail, e.head}));
    }
    document["graph"] = {{"node_count", config.topology.node_count()}, {"edges", edges}};
    document["system"] = {{"b", config.coupling_gain()},
                          {"horizon", config.horizon},
                          {"initial_state", config.initial_state}};

    json nodes = json::array();
    for (int node = 1; node <= config.models.node_count(); ++node) {
        const std::size_t k = static_cast<std::size_t>(node - 1);
        nodes.push_back({{"candidates", config.models.candidates[k]},
                         {"true_index", config.models.true_index[k]}});
    }
    document["models"] = {{"nodes", nodes}};

    json disturbance;
    switch (config.disturbance.kind) {
        case DisturbanceKind::zero:
            disturbance = {{"kind", "zero"}};
            break;
        case DisturbanceKind::sinusoid:
            disturbance = {{"kind", "sinusoid"},
                           {"amplitude", config.disturbance.sinusoid.amplitude},
                           {"angular_frequency", config.disturbance.sinusoid.angular_frequency},
                           {"phase", config.disturbance.sinusoid.phase}};
            break;
        case DisturbanceKind::gaussian:
            disturbance = {{"kind", "gaussian"},
                           {"stddev", config.disturbance.gaussian_stddev},
                           {"seed", config.disturbance.gaussian_seed}};
            break;
        case DisturbanceKind::file:
            disturbance = {{"kind", "file"}, {"path", config.disturbance.file_path}};
            break;
    }
    document["disturbance"] = disturbance;

    json controllers = json::array();
    for (ControllerKind kind : config.controllers) {
        controllers.push_back(std::string(to_string(kind)));
    }
    document["controllers"] = controllers;
    document["nominal"] = {{"a", config.nominal_decay}};
    document["seed"] = config.seed;

    return document.dump(2) + "\n";
}

ScenarioConfig paper_preset(std::uint64_t seed) {
    ScenarioConfig config;
    config.topology = Topology::build(
        {{1, 2}, {2, 3}, {2, 4}, {3, 5}, {4, 6}, {4, 7}}, 7);
    config.models.coupling_gain = 0.1;
    config.horizon = 30;
    config.seed = seed;

    const int n = config.topology.node_count();
    config.initial_state.assign(static_cast<std::size_t>(n), 1.0);

    SamplingSpec sampling;
    sampling.count = 5;
    expand_sampled_models(config.models, config.topology, sampling, seed);

    config.disturbance.kind = DisturbanceKind::sinusoid;
    config.disturbance.sinusoid.amplitude.assign(static_cast<std::size_t>(n), 0.05);
    config.disturbance.sinusoid.phase.assign(static_cast<std::size_t>(n), 0.0);
    for (int node = 1; node <= n; ++node) {
        config.disturbance.sinusoid.angular_frequency.push_back(
            2.0 * std::numbers::pi * (0.05 + 0.01 * static_cast<double>(node)));
    }

    config.controllers = {ControllerKind::minimax, ControllerKind::oracle,
                          ControllerKind::nominal};
    for (int node = 1; node <= n; ++node) {
        config.nominal_decay.push_back(
            admissible_interval(config.coupling_gain(), config.topology.degree(node)).midpoint());
    }

    validate(config);
    return config;
}

}  // namespace dmac
