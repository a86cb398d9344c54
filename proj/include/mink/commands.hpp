#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mink/scene.hpp"

namespace mink {

inline constexpr const char* kToolVersion = "0.1.0";

struct CliOverrides {
    std::optional<std::uint64_t> seed;
    std::optional<double> tol_exact;
    std::optional<double> tol_opt;
    std::optional<int> ngon;
    std::optional<int> trials;
    std::string suite = "all"; // proptest
    std::string body;          // named body override
};

struct CommandOutcome {
    int exit_code = 0;
    nlohmann::ordered_json report;
    std::string svg; // empty when the command has no figure
};

const std::vector<std::string>& command_names();

// Dispatches one CLI command. `scene` may be null only for proptest.
// validation_error and solver_error propagate to the caller (exit 2 / 3).
CommandOutcome run_command(const std::string& command, const Scene* scene,
                           const CliOverrides& flags);

} // namespace mink
