#pragma once

#include <optional>
#include <string_view>
#include <vector>

namespace dmac {

enum class ControllerKind { minimax, oracle, nominal };

constexpr std::string_view to_string(ControllerKind kind) noexcept {
    switch (kind) {
        case ControllerKind::minimax: return "minimax";
        case ControllerKind::oracle: return "oracle";
        case ControllerKind::nominal: return "nominal";
    }
    return "unknown";
}

std::optional<ControllerKind> controller_from_string(std::string_view name) noexcept;

/// Closed-loop log of one controller over one scenario. Row t holds the
/// state x(t), the control u(t) computed from it, the coupling sum s(t), the
/// disturbance w(t), and (for adaptive runs) the selected model. The final
/// row t = horizon carries a control and disturbance but no successor state;
/// an aborted run holds fewer rows.
struct TrajectoryRecord {
    ControllerKind controller = ControllerKind::minimax;
    int node_count = 0;
    int horizon = 0;

    // row-major, rows() * node_count entries each
    std::vector<double> state;
    std::vector<double> control;
    std::vector<double> coupling;
    std::vector<double> disturbance;
    std::vector<double> selected_value;  // adaptive runs only
    std::vector<int> selected_index;     // 1-based candidate ids, adaptive runs only

    int rows() const noexcept {
        return node_count > 0 ? static_cast<int>(state.size()) / node_count : 0;
    }

    bool has_selection() const noexcept { return !selected_value.empty(); }

    // accessors take a 1-based node id
    double state_at(int t, int node) const { return state[flat(t, node)]; }
    double control_at(int t, int node) const { return control[flat(t, node)]; }
    double coupling_at(int t, int node) const { return coupling[flat(t, node)]; }
    double disturbance_at(int t, int node) const { return disturbance[flat(t, node)]; }
    double selected_value_at(int t, int node) const { return selected_value[flat(t, node)]; }
    int selected_index_at(int t, int node) const { return selected_index[flat(t, node)]; }

private:
    std::size_t flat(int t, int node) const noexcept {
        return static_cast<std::size_t>(t) * static_cast<std::size_t>(node_count) +
               static_cast<std::size_t>(node - 1);
    }
};

}  // namespace dmac
