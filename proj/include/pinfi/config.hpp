#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pinfi/dynamics.hpp"
#include "pinfi/phase.hpp"

namespace pinfi {

struct SimBlock {
    double x0 = 1.0;
    double step_size = 0.0;
    double max_time = 0.0;
    Arbitration arbitration = Arbitration::Alternate;
    RoleModel role_model = RoleModel::ThresholdOnly;
    std::uint64_t seed = 0;
};

struct OutputBlock {
    std::string directory = ".";
    std::vector<std::string> formats = {"csv", "json"};
};

struct RunConfig {
    MarketParams market;
    std::optional<SimBlock> sim;
    std::optional<GridSpec> grid;
    OutputBlock output;
};

/// Parses a JSON config file. Unknown keys are hard errors; throws
/// InvalidConfig on any structural or type problem.
RunConfig load_config(const std::string& path);

SimConfig to_sim_config(const RunConfig& config);

}  // namespace pinfi
