#pragma once

#include <functional>
#include <span>
#include <vector>

#include "uavqos/kernels.hpp"
#include "uavqos/model.hpp"
#include "uavqos/rng.hpp"

namespace uavqos {

struct SwitchEvent {
  double time = 0.0;
  UavId uav = 0;
  int from_channel = 0;
  int to_channel = 0;
  UserId trigger_user = 0;
  std::vector<UserId> released_users;
};

struct FailureRecord {
  double time = 0.0;
  double fraction = 0.0;
  std::vector<UavId> failed;
};

struct ScheduledFailure {
  FailureEvent event;
  bool applied = false;
};

struct WorldState {
  double time = 0.0;
  long tick = 0;
  double altitude = 100.0;
  std::vector<UavState> uavs;
  std::vector<UserState> users;
  SplitMix64 rng;
  std::vector<ScheduledFailure> failures;
  std::vector<SwitchEvent> switch_log;
  std::vector<FailureRecord> failure_log;
};

// Builds the tick-0 world from a config whose users and UAV positions are
// explicit (see generate_scenario).
WorldState make_world(const ScenarioConfig& config);

// Greedy nearest-eligible association with capacity spill. Eligible means
// alive, within r, and on L_0 for regular users. Closest users pick first;
// ties break on id.
void associate_users(WorldState& world, const ControlGains& gains);

void update_rates(WorldState& world, const ControlGains& gains, const RadioParams& radio);

// Returns the switches performed this tick (also appended to the world log).
std::vector<SwitchEvent> maybe_switch_channel(WorldState& world, const ControlGains& gains,
                                              const RadioParams& radio);

// Fails round-half-up(fraction * alive) UAVs chosen with the world rng.
FailureRecord inject_failures(WorldState& world, const FailureEvent& event);

// Failure events whose time has come and that have not fired yet.
void apply_due_failures(WorldState& world);

// Control inputs for every UAV from the current (frozen) state; dead UAVs get 0.
std::vector<Vec3> compute_controls(const WorldState& world, const KernelParams& params,
                                   ControllerMode mode);

// Semi-implicit Euler update: p += u dt (clamped to v_max, horizontal),
// q += p dt with z pinned to the altitude.
void integrate(WorldState& world, std::span<const Vec3> controls, const ControlGains& gains);

// Called once per tick after association and rate update, before channel
// switching and motion.
using TickObserver = std::function<void(const WorldState&)>;

// One synchronous tick: failures, association, rates, channel switching,
// control, integration, time advance.
void step(WorldState& world, const ControlGains& gains, const RadioParams& radio, ControllerMode mode,
          const TickObserver& observer = {});

// Throws std::logic_error if a hard invariant of the world is broken.
void check_invariants(const WorldState& world, const ControlGains& gains);

}  // namespace uavqos
