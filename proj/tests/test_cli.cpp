#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>

#include "desk_scenario.hpp"
#include "tschsim/config.hpp"
#include "tschsim/csv.hpp"
#include "tschsim/errors.hpp"
#include "tschsim/presets.hpp"

using namespace tschsim;

namespace {

std::string write_temp(const std::string& name, const std::string& body) {
  std::string path = std::string("/tmp/tschsim_cli_") + name;
  std::ofstream out(path);
  out << body;
  return path;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

}  // namespace

TEST_CASE("empty config file yields the reference defaults") {
  const auto path = write_temp("empty.cfg", "\n# nothing here\n");
  const SimulationConfig cfg = parse_config(SimulationConfig{}, path, {});
  CHECK(cfg.n_nodes == 35);
  CHECK(cfg.radio.n_slots == 8);
  CHECK(cfg.radio.n_frequencies == 3);
  CHECK(cfg.radio.transmit_power == 10.0);
  CHECK(cfg.radio.beta_n0 == 2.0);
  CHECK(cfg.radio.packet_bits == 5000.0);
  CHECK(cfg.radio.slot_duration_ms == 15.0);
  CHECK(cfg.radio.beta == cfg.radio.packet_bits);
  std::remove(path.c_str());
}

TEST_CASE("flags override config file values") {
  const auto path = write_temp("nodes.cfg", "nodes = 20\ncycles = 400\n");
  ConfigOverrides overrides;
  overrides.nodes = 10;
  const SimulationConfig cfg = parse_config(SimulationConfig{}, path, overrides);
  CHECK(cfg.n_nodes == 10);
  CHECK(cfg.n_cycles == 400);
  std::remove(path.c_str());
}

TEST_CASE("config errors carry distinct kinds") {
  CHECK_THROWS_AS(parse_config(SimulationConfig{}, "/nonexistent/file.cfg", {}), ConfigError);
  try {
    parse_config(SimulationConfig{}, "/nonexistent/file.cfg", {});
  } catch (const ConfigError& e) {
    CHECK(e.kind == ConfigError::Kind::missing_file);
  }

  const auto unknown = write_temp("unknown.cfg", "frobnicate = 3\n");
  try {
    parse_config(SimulationConfig{}, unknown, {});
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(e.kind == ConfigError::Kind::unknown_key);
  }
  std::remove(unknown.c_str());

  const auto out_of_range = write_temp("range.cfg", "nodes = -3\n");
  try {
    parse_config(SimulationConfig{}, out_of_range, {});
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(e.kind == ConfigError::Kind::out_of_range);
  }
  std::remove(out_of_range.c_str());

  const auto bad_policy = write_temp("policy.cfg", "policy = bogus\n");
  CHECK_THROWS_AS(parse_config(SimulationConfig{}, bad_policy, {}), ConfigError);
  std::remove(bad_policy.c_str());
}

TEST_CASE("seed precedence: flag, then file, then environment") {
  const auto with_seed = write_temp("seed.cfg", "seed = 11\n");
  const auto no_seed = write_temp("noseed.cfg", "nodes = 12\n");

  setenv("TSCHSIM_SEED", "99", 1);
  CHECK(parse_config(SimulationConfig{}, no_seed, {}).master_seed == 99);
  CHECK(parse_config(SimulationConfig{}, with_seed, {}).master_seed == 11);
  ConfigOverrides overrides;
  overrides.seed = 5;
  CHECK(parse_config(SimulationConfig{}, with_seed, overrides).master_seed == 5);
  unsetenv("TSCHSIM_SEED");
  CHECK(parse_config(SimulationConfig{}, no_seed, {}).master_seed == 1);

  std::remove(with_seed.c_str());
  std::remove(no_seed.c_str());
}

TEST_CASE("explicit beta survives packet size changes") {
  const auto path = write_temp("beta.cfg", "beta = 1000\npacket_bits = 4000\n");
  const SimulationConfig cfg = parse_config(SimulationConfig{}, path, {});
  CHECK(cfg.radio.beta == 1000.0);
  CHECK(cfg.radio.packet_bits == 4000.0);
  std::remove(path.c_str());
}

TEST_CASE("format_double round trips exactly") {
  Rng rng(2);
  for (int i = 0; i < 200; ++i) {
    const double v = rng.uniform(-1e6, 1e6) * std::pow(10.0, static_cast<double>(rng.next_u64() % 7) - 3.0);
    CHECK(std::stod(format_double(v)) == v);
  }
}

TEST_CASE("CSV write/read round trip preserves every field") {
  std::vector<CsvRow> rows;
  CsvRow a;
  a.experiment = "convergence";
  a.policy = "cmab_llr";
  a.replication_count = 20;
  a.cycle = 17;
  a.overall_throughput = 3.141592653589793;
  a.avg_throughput = 2.718281828459045;
  a.cumulative_regret = -0.25;
  a.avg_regret = 1e-17;
  rows.push_back(a);
  CsvRow b;
  b.experiment = "node_sweep";
  b.policy = "statistical";
  b.replication_count = 3;
  b.sweep_param = "nodes";
  b.sweep_value = 40.0;
  b.avg_throughput = 12.5;
  rows.push_back(b);

  const std::string path = "/tmp/tschsim_cli_roundtrip.csv";
  write_csv(path, rows);
  const std::vector<CsvRow> back = read_csv(path);
  REQUIRE(back.size() == 2);
  CHECK(back[0].experiment == a.experiment);
  CHECK(back[0].policy == a.policy);
  CHECK(back[0].replication_count == a.replication_count);
  CHECK(back[0].cycle == a.cycle);
  CHECK(back[0].overall_throughput == a.overall_throughput);
  CHECK(back[0].avg_throughput == a.avg_throughput);
  CHECK(back[0].cumulative_regret == a.cumulative_regret);
  CHECK(back[0].avg_regret == a.avg_regret);
  CHECK_FALSE(back[0].sweep_value.has_value());
  CHECK(back[1].sweep_param == "nodes");
  CHECK(back[1].sweep_value == 40.0);
  CHECK_FALSE(back[1].cycle.has_value());
  CHECK_FALSE(back[1].overall_throughput.has_value());
  std::remove(path.c_str());
}

TEST_CASE("preset metadata follows the experiment definitions") {
  const ExperimentPreset nodes = make_preset("node_sweep");
  CHECK(nodes.sweep_param == "nodes");
  CHECK(nodes.sweep_values == std::vector<int>{10, 20, 30, 40, 50, 60, 70, 80, 90, 100});

  const ExperimentPreset slots = make_preset("slot_sweep");
  CHECK(slots.sweep_values == std::vector<int>{2, 3, 4, 5, 6, 7, 8, 9, 10});
  const SimulationConfig slot_base = preset_base_config(slots, SimulationConfig{});
  CHECK(slot_base.n_nodes == 10);
  CHECK(slot_base.radio.n_frequencies == 3);

  const ExperimentPreset channels = make_preset("channel_sweep");
  CHECK(channels.sweep_values == std::vector<int>{1, 2, 3, 4, 5});

  const ExperimentPreset fairness = make_preset("fairness");
  CHECK(fairness.sweep_param == "link");
  CHECK(fairness.policies.size() == 2);
  const SimulationConfig fair_base = preset_base_config(fairness, SimulationConfig{});
  CHECK(fair_base.n_nodes == 5);

  CHECK(make_preset("convergence").per_cycle_rows);
  CHECK(make_preset("regret").policies == std::vector<PolicyKind>{PolicyKind::cmab_llr});
  CHECK_THROWS_AS(make_preset("bogus"), std::invalid_argument);
}

TEST_CASE("per-cycle presets emit one row per policy and cycle") {
  SimulationConfig cfg = desk::config(PolicyKind::statistical);
  cfg.n_cycles = 40;
  cfg.n_replications = 2;
  ExperimentPreset preset = make_preset("convergence");
  preset.policies = {PolicyKind::statistical, PolicyKind::perfect_csi};
  const std::vector<CsvRow> rows = run_preset_rows(preset, cfg);
  REQUIRE(rows.size() == 80);
  CHECK(rows[0].experiment == "convergence");
  CHECK(rows[0].policy == "perfect_csi");
  CHECK(rows[0].cycle == 1);
  CHECK(rows[40].policy == "statistical");
  for (const CsvRow& row : rows) {
    CHECK(row.replication_count == 2);
    CHECK(row.overall_throughput.has_value());
    CHECK(row.avg_throughput.has_value());
  }
}

TEST_CASE("fairness rows carry one entry per link") {
  SimulationConfig cfg = desk::config(PolicyKind::statistical);
  cfg.n_cycles = 60;
  cfg.n_replications = 2;
  ExperimentPreset preset = make_preset("fairness");
  preset.policies = {PolicyKind::statistical};
  const std::vector<CsvRow> rows = run_preset_rows(preset, cfg);
  REQUIRE(rows.size() == 6);  // six desk links
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].sweep_param == "link");
    CHECK(rows[i].sweep_value == static_cast<double>(i));
    CHECK(rows[i].avg_throughput.has_value());
    CHECK_FALSE(rows[i].cycle.has_value());
  }
}

TEST_CASE("sweep presets emit one row per policy and sweep point") {
  SimulationConfig cfg = desk::config(PolicyKind::statistical);
  cfg.n_cycles = 30;
  cfg.n_replications = 2;
  ExperimentPreset preset = make_preset("slot_sweep");
  preset.policies = {PolicyKind::statistical};
  preset.sweep_values = {2, 3};
  const std::vector<CsvRow> rows = run_preset_rows(preset, cfg);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].sweep_param == "slots");
  CHECK(rows[0].sweep_value == 2.0);
  CHECK(rows[1].sweep_value == 3.0);
  for (const CsvRow& row : rows) CHECK(row.avg_throughput.has_value());
}

TEST_CASE("identical config and seed produce byte-identical CSV output") {
  SimulationConfig cfg = desk::config(PolicyKind::erroneous_csi);
  cfg.n_cycles = 50;
  cfg.n_replications = 2;
  ExperimentPreset preset = make_preset("convergence");
  preset.policies = {PolicyKind::erroneous_csi, PolicyKind::perfect_csi};

  const std::string p1 = "/tmp/tschsim_cli_det1.csv";
  const std::string p2 = "/tmp/tschsim_cli_det2.csv";
  run_preset(preset, cfg, p1);
  run_preset(preset, cfg, p2);
  const std::string b1 = slurp(p1);
  CHECK_FALSE(b1.empty());
  CHECK(b1 == slurp(p2));
  std::remove(p1.c_str());
  std::remove(p2.c_str());
}
