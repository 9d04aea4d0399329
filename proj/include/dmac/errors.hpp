#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dmac {

/// Failure classes surfaced by the library and mapped to CLI exit codes.
enum class ErrorCategory {
    usage,          ///< malformed command line
    config,         ///< schema violation or structurally invalid scenario
    admissibility,  ///< a decay value violates the communication constraint
    capacity,       ///< model sampling request cannot be satisfied
    io,             ///< file could not be read or written
    engine,         ///< simulation aborted (non-finite data or state blow-up)
};

constexpr std::string_view to_string(ErrorCategory c) noexcept {
    switch (c) {
        case ErrorCategory::usage: return "usage";
        case ErrorCategory::config: return "config";
        case ErrorCategory::admissibility: return "admissibility";
        case ErrorCategory::capacity: return "capacity";
        case ErrorCategory::io: return "io";
        case ErrorCategory::engine: return "engine";
    }
    return "unknown";
}

/// Stable process exit code for each category (0 is success).
constexpr int exit_code(ErrorCategory c) noexcept {
    switch (c) {
        case ErrorCategory::usage: return 2;
        case ErrorCategory::config: return 3;
        case ErrorCategory::admissibility: return 4;
        case ErrorCategory::capacity: return 5;
        case ErrorCategory::io: return 6;
        case ErrorCategory::engine: return 7;
    }
    return 1;
}

class Error : public std::runtime_error {
public:
    Error(ErrorCategory category, const std::string& message)
        : std::runtime_error(message), category_(category) {}

    ErrorCategory category() const noexcept { return category_; }

private:
    ErrorCategory category_;
};

}  // namespace dmac
