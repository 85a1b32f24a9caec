#pragma once

#include <filesystem>
#include <string>

#include "uavqos/model.hpp"

namespace uavqos {

// Scenario documents are JSON objects whose keys mirror ScenarioConfig.
// Missing keys take their defaults; unknown keys are rejected.
ScenarioConfig parse_config(const std::string& text);
std::string dump_config(const ScenarioConfig& config);

// Throws IoError when the file cannot be read, ConfigError when it is invalid.
ScenarioConfig load_config(const std::filesystem::path& path);

}  // namespace uavqos
