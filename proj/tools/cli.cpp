#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <regex>

#include "CLI11.hpp"
#include "uavqos/config_io.hpp"
#include "uavqos/export.hpp"
#include "uavqos/simulation.hpp"
#include "uavqos/sweep.hpp"

namespace uavqos::cli {

namespace {

constexpr const char* kOutDirEnv = "UAVQOS_OUT_DIR";

std::string default_out_dir() {
  if (const char* env = std::getenv(kOutDirEnv); env != nullptr && *env != '\0') return env;
  return "out";
}

// Accepts "A..B" (inclusive) or a comma-separated list.
std::vector<int> parse_counts(const std::string& spec) {
  static const std::regex range(R"(^\s*(\d+)\s*\.\.\s*(\d+)\s*$)");
  std::smatch m;
  std::vector<int> counts;
  if (std::regex_match(spec, m, range)) {
    const int lo = std::stoi(m[1]);
    const int hi = std::stoi(m[2]);
    if (lo > hi) throw ConfigError("--uavs range must be ascending");
    for (int k = lo; k <= hi; ++k) counts.push_back(k);
    return counts;
  }
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      counts.push_back(std::stoi(item, &used));
      if (used != item.size()) throw ConfigError("");
    } catch (const std::exception&) {
      throw ConfigError("--uavs expects A..B or a comma-separated list, got '" + spec + "'");
    }
  }
  if (counts.empty()) throw ConfigError("--uavs is empty");
  return counts;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"QoS-driven UAV small-cell swarm simulator"};
  app.require_subcommand(1);

  std::string scenario;
  std::optional<std::uint64_t> seed;
  std::string out_dir;
  std::string mode;
  bool user_trace = false;
  std::string uavs;

  CLI::App* run_cmd = app.add_subcommand("run", "Simulate one scenario");
  run_cmd->add_option("--scenario", scenario, "Scenario JSON file")->required();
  run_cmd->add_option("--seed", seed, "Override the scenario seed");
  run_cmd->add_option("--out", out_dir, std::string("Output directory (default $") + kOutDirEnv + " or ./out)");
  run_cmd->add_option("--mode", mode, "Controller: qos or flocking")
      ->check(CLI::IsMember({"qos", "flocking"}));
  run_cmd->add_flag("--trace", user_trace, "Also write per-user rates (user_rates.csv)");

  CLI::App* sweep_cmd = app.add_subcommand("sweep", "Steady-state metrics over a range of UAV counts");
  sweep_cmd->add_option("--scenario", scenario, "Scenario JSON file")->required();
  sweep_cmd->add_option("--uavs", uavs, "UAV counts, A..B or a,b,c")->required();
  sweep_cmd->add_option("--seed", seed, "Override the scenario seed");
  sweep_cmd->add_option("--out", out_dir, "Output directory");

  CLI::App* validate_cmd = app.add_subcommand("validate", "Parse and check a scenario file");
  validate_cmd->add_option("--scenario", scenario, "Scenario JSON file")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help("", CLI::AppFormatMode::All);
    return kInvalid;
  }
  if (out_dir.empty()) out_dir = default_out_dir();

  try {
    ScenarioConfig config = load_config(scenario);
    if (seed) config.seed = *seed;
    validate(config);

    if (*validate_cmd) {
      out << "ok: " << scenario << "\n";
      return kOk;
    }
    if (*run_cmd) {
      RunOptions options;
      options.user_trace = user_trace;
      if (!mode.empty()) options.mode = parse_controller_mode(mode);
      const RunResult result = run(config, options);
      export_run(result, out_dir);
      const TickMetrics& last = result.metrics.back();
      out << "ran " << result.metrics.size() << " ticks; final premium mean "
          << last.premium.mean_rate / 1e6 << " Mbps, regular mean " << last.regular.mean_rate / 1e6
          << " Mbps; wrote " << out_dir << "\n";
      return kOk;
    }
    const std::vector<int> counts = parse_counts(uavs);
    const SweepResult result = run_sweep(config, counts);
    export_sweep(config, result, out_dir);
    out << "swept " << counts.size() << " UAV counts; wrote " << out_dir << "\n";
    return kOk;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kIo;
  } catch (const ConfigError& e) {
    err << "invalid scenario: " << e.what() << "\n";
    return kInvalid;
  }
}

}  // namespace uavqos::cli
