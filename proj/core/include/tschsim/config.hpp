#pragma once

#include <optional>
#include <string>

#include "tschsim/engine.hpp"

namespace tschsim {

/// Command-line overrides; set fields win over config-file values.
struct ConfigOverrides {
  std::optional<int> nodes;
  std::optional<int> slots;
  std::optional<int> channels;
  std::optional<int> cycles;
  std::optional<int> replications;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> policy;
};

/// Builds a SimulationConfig from `base` overlaid with the key=value config
/// file (when path is non-empty) and then the flag overrides. Seed
/// precedence: flag, file, TSCHSIM_SEED environment variable, default.
/// Throws ConfigError with a distinct kind for a missing file, an unknown
/// key, and an unparseable or out-of-range value.
SimulationConfig parse_config(SimulationConfig base, const std::string& path, const ConfigOverrides& overrides);

}  // namespace tschsim
