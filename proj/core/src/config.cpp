#include "tschsim/config.hpp"

#include <cstdlib>
#include <fstream>

#include "tschsim/errors.hpp"

namespace tschsim {
namespace {

[[noreturn]] void bad_value(const std::string& key, const std::string& value, const std::string& why) {
  throw ConfigError(ConfigError::Kind::out_of_range, "config key '" + key + "' = '" + value + "': " + why);
}

double parse_number(const std::string& key, const std::string& value) {
  try {
    std::size_t consumed = 0;
    double v = std::stod(value, &consumed);
    if (consumed != value.size()) bad_value(key, value, "trailing characters");
    return v;
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception&) {
    bad_value(key, value, "not a number");
  }
}

int parse_int(const std::string& key, const std::string& value, int lo, int hi) {
  double v = parse_number(key, value);
  if (v != static_cast<double>(static_cast<long long>(v))) bad_value(key, value, "expected an integer");
  if (v < lo || v > hi) bad_value(key, value, "outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return static_cast<int>(v);
}

double parse_positive(const std::string& key, const std::string& value) {
  double v = parse_number(key, value);
  if (!(v > 0.0)) bad_value(key, value, "must be positive");
  return v;
}

double parse_non_negative(const std::string& key, const std::string& value) {
  double v = parse_number(key, value);
  if (!(v >= 0.0)) bad_value(key, value, "must be >= 0");
  return v;
}

std::uint64_t parse_seed(const std::string& key, const std::string& value) {
  try {
    std::size_t consumed = 0;
    unsigned long long v = std::stoull(value, &consumed);
    if (consumed != value.size()) bad_value(key, value, "trailing characters");
    return static_cast<std::uint64_t>(v);
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception&) {
    bad_value(key, value, "not an unsigned integer");
  }
}

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  std::size_t e = s.find_last_not_of(" \t\r");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

struct FileState {
  bool beta_set = false;
  bool seed_set = false;
};

void apply_key(SimulationConfig& cfg, FileState& state, const std::string& key, const std::string& value) {
  if (key == "nodes") {
    cfg.n_nodes = parse_int(key, value, 2, 100000);
  } else if (key == "area_width") {
    cfg.area_width = parse_positive(key, value);
  } else if (key == "area_height") {
    cfg.area_height = parse_positive(key, value);
  } else if (key == "comm_range") {
    cfg.comm_range = parse_positive(key, value);
  } else if (key == "interference_range") {
    cfg.interference_range = parse_positive(key, value);
  } else if (key == "catalog_cap") {
    cfg.catalog_cap = static_cast<std::size_t>(parse_int(key, value, 1, 100000000));
  } else if (key == "slots") {
    cfg.radio.n_slots = parse_int(key, value, 1, 4096);
  } else if (key == "channels") {
    cfg.radio.n_frequencies = parse_int(key, value, 1, 64);
  } else if (key == "power_mw") {
    cfg.radio.transmit_power = parse_positive(key, value);
  } else if (key == "beta_n0") {
    cfg.radio.beta_n0 = parse_positive(key, value);
  } else if (key == "beta") {
    cfg.radio.beta = parse_positive(key, value);
    state.beta_set = true;
  } else if (key == "packet_bits") {
    cfg.radio.packet_bits = parse_positive(key, value);
  } else if (key == "slot_ms") {
    cfg.radio.slot_duration_ms = parse_positive(key, value);
  } else if (key == "policy") {
    try {
      cfg.policy.kind = parse_policy(value);
    } catch (const std::invalid_argument& e) {
      bad_value(key, value, e.what());
    }
  } else if (key == "error_sigma") {
    cfg.policy.error_sigma = parse_non_negative(key, value);
  } else if (key == "error_sigma_factor") {
    cfg.policy.error_sigma_factor = parse_non_negative(key, value);
  } else if (key == "normalization_max") {
    cfg.policy.normalization_max = parse_non_negative(key, value);
  } else if (key == "exploration_constant") {
    cfg.policy.exploration_constant = parse_non_negative(key, value);
  } else if (key == "cycles") {
    cfg.n_cycles = parse_int(key, value, 1, 100000000);
  } else if (key == "replications") {
    cfg.n_replications = parse_int(key, value, 1, 1000000);
  } else if (key == "seed") {
    cfg.master_seed = parse_seed(key, value);
    state.seed_set = true;
  } else if (key == "topology_file") {
    cfg.topology_file = value;
  } else {
    throw ConfigError(ConfigError::Kind::unknown_key, "unknown config key: " + key);
  }
}

}  // namespace

SimulationConfig parse_config(SimulationConfig base, const std::string& path, const ConfigOverrides& overrides) {
  SimulationConfig cfg = std::move(base);
  FileState state;

  if (!path.empty()) {
    std::ifstream in(path);
    if (!in) throw ConfigError(ConfigError::Kind::missing_file, "config file not found: " + path);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (auto pos = line.find('#'); pos != std::string::npos) line.resize(pos);
      line = trim(line);
      if (line.empty()) continue;
      auto eq = line.find('=');
      if (eq == std::string::npos)
        throw ConfigError(ConfigError::Kind::out_of_range,
                          "config line " + std::to_string(line_no) + " is not key=value: " + line);
      const std::string key = trim(line.substr(0, eq));
      const std::string value = trim(line.substr(eq + 1));
      apply_key(cfg, state, key, value);
    }
  }

  if (overrides.nodes) cfg.n_nodes = *overrides.nodes;
  if (overrides.slots) cfg.radio.n_slots = *overrides.slots;
  if (overrides.channels) cfg.radio.n_frequencies = *overrides.channels;
  if (overrides.cycles) cfg.n_cycles = *overrides.cycles;
  if (overrides.replications) cfg.n_replications = *overrides.replications;
  if (overrides.policy) {
    try {
      cfg.policy.kind = parse_policy(*overrides.policy);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(ConfigError::Kind::out_of_range, e.what());
    }
  }

  if (overrides.seed) {
    cfg.master_seed = *overrides.seed;
  } else if (!state.seed_set) {
    if (const char* env = std::getenv("TSCHSIM_SEED")) cfg.master_seed = parse_seed("TSCHSIM_SEED", env);
  }

  // The bandwidth factor tracks the packet size unless configured explicitly,
  // keeping capacities in packets per slot.
  if (!state.beta_set) cfg.radio.beta = cfg.radio.packet_bits;

  try {
    cfg.validate();
  } catch (const std::exception& e) {
    throw ConfigError(ConfigError::Kind::out_of_range, e.what());
  }
  return cfg;
}

}  // namespace tschsim
