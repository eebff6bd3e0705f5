#pragma once

#include <optional>
#include <string>
#include <vector>

#include "smbench/engine.hpp"

namespace smbench {

/// A run configuration loaded from a JSON file with sections
/// plant / controller / controller_b / simulation / disturbance / output.
/// Unknown keys are rejected with their dotted path; every field can be
/// overridden with "--set section.key=value" pairs.
struct LoadedConfig {
  SimConfig sim;
  std::optional<ControllerConfig> controller_b;  // benchmark second lane
  std::string run_id = "run";
  std::string out_dir;
};

/// Parse a config file, apply overrides ("a.b=value", applied after load;
/// disjoint keys are order-independent) and validate strictly.
LoadedConfig load_config(const std::string& path,
                         const std::vector<std::string>& overrides = {});

/// Same, starting from a JSON string (tests, generated configs).
LoadedConfig parse_config(const std::string& json_text,
                          const std::vector<std::string>& overrides = {});

/// Serialize a configuration back to JSON (round-trips through parse_config).
std::string config_to_json(const LoadedConfig& config);

}  // namespace smbench
