#pragma once

#include <vector>

#include "uavqos/metrics.hpp"
#include "uavqos/world.hpp"

namespace uavqos {

struct TraceRow {
  double time = 0.0;
  UavId uav = 0;
  Vec3 position;
  Vec3 velocity;
  int channel = 0;
  bool alive = true;
  int load = 0;
};

struct UserTraceRow {
  double time = 0.0;
  UserId user = 0;
  UserClass klass = UserClass::regular;
  std::optional<UavId> serving_uav;
  double rate = 0.0;
  double mean_rate = 0.0;
};

// Per-tick backhaul constraint monitor over alive UAVs.
struct SeparationMonitor {
  std::vector<int> too_close;    // pairs closer than d, per tick
  std::vector<bool> connected;   // alive UAV graph (edges <= r) connected, per tick

  [[nodiscard]] long total_too_close() const;
  // Pair violations within the final 10% of ticks.
  [[nodiscard]] long steady_state_too_close() const;
  [[nodiscard]] long disconnected_ticks() const;
};

struct RunOptions {
  bool user_trace = false;
  // Overrides the config's controller_mode when set.
  std::optional<ControllerMode> mode;
};

struct RunResult {
  ScenarioConfig config;  // expanded: explicit users and UAV positions
  std::vector<TickMetrics> metrics;
  std::vector<TraceRow> trace;
  std::vector<UserTraceRow> user_trace;
  std::vector<SwitchEvent> switches;
  std::vector<FailureRecord> failures;
  SeparationMonitor monitor;
  WorldState final_world;
};

// Number of ticks a run records: floor(duration / dt) + 1.
long tick_count(const ScenarioConfig& config);

// Validates, expands and simulates the config over its fixed horizon.
// Throws ConfigError before tick 0 on invalid input.
RunResult run(const ScenarioConfig& config, const RunOptions& options = {});

}  // namespace uavqos
