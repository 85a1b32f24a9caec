#include "uavqos/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "uavqos/scenario.hpp"

namespace uavqos {

namespace {

void observe_separation(const WorldState& world, const ControlGains& gains, SeparationMonitor& monitor) {
  std::vector<const UavState*> alive;
  for (const UavState& uav : world.uavs) {
    if (uav.alive) alive.push_back(&uav);
  }
  const std::size_t n = alive.size();
  int too_close = 0;
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto root = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double dist = distance(alive[i]->position, alive[j]->position);
      if (dist > gains.r) continue;
      if (dist < gains.d) too_close += 1;
      parent[root(i)] = root(j);
    }
  }
  std::size_t components = 0;
  for (std::size_t i = 0; i < n; ++i) components += root(i) == i ? 1 : 0;
  monitor.too_close.push_back(too_close);
  monitor.connected.push_back(components <= 1);
}

}  // namespace

long SeparationMonitor::total_too_close() const {
  return std::accumulate(too_close.begin(), too_close.end(), 0L);
}

long SeparationMonitor::steady_state_too_close() const {
  const std::size_t n = too_close.size();
  if (n == 0) return 0;
  const std::size_t tail = std::max<std::size_t>(1, (n + 9) / 10);
  return std::accumulate(too_close.end() - static_cast<std::ptrdiff_t>(tail), too_close.end(), 0L);
}

long SeparationMonitor::disconnected_ticks() const {
  return std::count(connected.begin(), connected.end(), false);
}

long tick_count(const ScenarioConfig& config) {
  return static_cast<long>(std::floor(config.duration / config.gains.dt + 1e-9)) + 1;
}

RunResult run(const ScenarioConfig& config, const RunOptions& options) {
  validate(config);
  RunResult result;
  result.config = generate_scenario(config, config.seed);
  if (options.mode) result.config.controller_mode = *options.mode;
  const ScenarioConfig& cfg = result.config;

  WorldState world = make_world(cfg);
  const long ticks = tick_count(cfg);
  result.metrics.reserve(static_cast<std::size_t>(ticks));
  result.trace.reserve(static_cast<std::size_t>(ticks) * world.uavs.size());

  const TickObserver observer = [&](const WorldState& w) {
    check_invariants(w, cfg.gains);
    result.metrics.push_back(compute_metrics(w));
    for (const UavState& uav : w.uavs) {
      result.trace.push_back({w.time, uav.id, uav.position, uav.velocity, uav.channel, uav.alive,
                              static_cast<int>(uav.connected_users.size())});
    }
    if (options.user_trace) {
      for (const UserState& u : w.users) {
        result.user_trace.push_back({w.time, u.id, u.klass, u.serving_uav, u.achieved_rate, u.mean_rate});
      }
    }
    observe_separation(w, cfg.gains, result.monitor);
  };

  for (long k = 0; k < ticks; ++k) {
    step(world, cfg.gains, cfg.radio, cfg.controller_mode, observer);
  }
  result.switches = world.switch_log;
  result.failures = world.failure_log;
  result.final_world = std::move(world);
  return result;
}

}  // namespace uavqos
