#include "uavqos/world.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "uavqos/radio.hpp"

namespace uavqos {

namespace {

// Slack for comparisons of accumulated simulation time against schedules.
constexpr double kTimeSlack = 1e-9;

constexpr std::uint64_t kFailureStream = 0xD1B54A32D192ED03ULL;

void fail(const std::string& what) { throw std::logic_error("invariant violated: " + what); }

bool eligible(const UavState& uav, const UserState& user, double r) {
  if (!uav.alive) return false;
  if (user.klass == UserClass::regular && uav.channel != 0) return false;
  return distance(uav.position, user.position) <= r;
}

void release_user(WorldState& world, UserState& user) {
  if (!user.serving_uav) return;
  auto& list = world.uavs[static_cast<std::size_t>(*user.serving_uav)].connected_users;
  list.erase(std::remove(list.begin(), list.end(), user.id), list.end());
  user.serving_uav.reset();
}

}  // namespace

WorldState make_world(const ScenarioConfig& config) {
  if (config.user_layout) {
    throw ConfigError("make_world needs explicit users; expand the layout with generate_scenario");
  }
  if (static_cast<std::size_t>(config.uav_count) > config.uav_initial_positions.size()) {
    throw ConfigError("make_world needs an explicit position for every UAV");
  }
  WorldState world;
  world.altitude = config.H;
  world.rng = SplitMix64(config.seed ^ kFailureStream);
  for (int i = 0; i < config.uav_count; ++i) {
    UavState uav;
    uav.id = i;
    const Vec3& p = config.uav_initial_positions[static_cast<std::size_t>(i)];
    uav.position = {p.x, p.y, config.H};
    world.uavs.push_back(std::move(uav));
  }
  for (std::size_t m = 0; m < config.users.size(); ++m) {
    UserState user;
    user.id = static_cast<UserId>(m);
    user.position = config.users[m].position;
    user.klass = config.users[m].klass;
    user.target_rate = config.targets.for_class(user.klass);
    world.users.push_back(std::move(user));
  }
  std::vector<FailureEvent> events = config.failure_events;
  std::stable_sort(events.begin(), events.end(),
                   [](const FailureEvent& a, const FailureEvent& b) { return a.at_time < b.at_time; });
  for (const FailureEvent& e : events) world.failures.push_back({e, false});
  return world;
}

void associate_users(WorldState& world, const ControlGains& gains) {
  for (UavState& uav : world.uavs) {
    uav.connected_users.clear();
    uav.demand = 0;
  }

  struct Candidate {
    double dist;
    UavId uav;
  };
  struct Chooser {
    UserId user;
    std::vector<Candidate> options;  // nearest first
  };

  std::vector<Chooser> choosers;
  choosers.reserve(world.users.size());
  for (UserState& user : world.users) {
    user.serving_uav.reset();
    Chooser c{user.id, {}};
    for (const UavState& uav : world.uavs) {
      if (eligible(uav, user, gains.r)) c.options.push_back({distance(uav.position, user.position), uav.id});
    }
    if (c.options.empty()) continue;
    std::sort(c.options.begin(), c.options.end(), [](const Candidate& a, const Candidate& b) {
      return a.dist != b.dist ? a.dist < b.dist : a.uav < b.uav;
    });
    world.uavs[static_cast<std::size_t>(c.options.front().uav)].demand += 1;
    choosers.push_back(std::move(c));
  }
  std::sort(choosers.begin(), choosers.end(), [](const Chooser& a, const Chooser& b) {
    const double da = a.options.front().dist;
    const double db = b.options.front().dist;
    return da != db ? da < db : a.user < b.user;
  });

  const auto capacity = static_cast<std::size_t>(std::floor(gains.n_max));
  for (const Chooser& c : choosers) {
    for (const Candidate& option : c.options) {
      UavState& uav = world.uavs[static_cast<std::size_t>(option.uav)];
      if (uav.connected_users.size() >= capacity) continue;
      uav.connected_users.push_back(c.user);
      world.users[static_cast<std::size_t>(c.user)].serving_uav = uav.id;
      break;
    }
  }
  for (UavState& uav : world.uavs) std::sort(uav.connected_users.begin(), uav.connected_users.end());
}

void update_rates(WorldState& world, const ControlGains& gains, const RadioParams& radio) {
  for (UserState& user : world.users) {
    user.achieved_rate =
        user.serving_uav ? evaluate_link(user, *user.serving_uav, world.uavs, radio).rate : 0.0;
    user.rate_window.push_back({world.time, user.achieved_rate});
    while (user.rate_window.size() > 1 &&
           world.time - user.rate_window.front().time >= gains.tau - kTimeSlack) {
      user.rate_window.pop_front();
    }
    double sum = 0.0;
    for (const RateSample& s : user.rate_window) sum += s.rate;
    user.mean_rate = sum / static_cast<double>(user.rate_window.size());
  }
}

std::vector<SwitchEvent> maybe_switch_channel(WorldState& world, const ControlGains& gains,
                                              const RadioParams& radio) {
  std::vector<SwitchEvent> events;
  const int channels = radio.num_channels;

  auto channel_in_use_by_other = [&](int channel, UavId self) {
    return std::any_of(world.uavs.begin(), world.uavs.end(), [&](const UavState& k) {
      return k.alive && k.id != self && k.channel == channel;
    });
  };

  for (UavState& uav : world.uavs) {
    if (!uav.alive) continue;
    if (world.time - uav.last_switch_time < gains.tau - kTimeSlack) continue;

    std::optional<UserId> trigger;
    for (UserId m : uav.connected_users) {
      const UserState& u = world.users[static_cast<std::size_t>(m)];
      if (u.klass == UserClass::premium && u.achieved_rate < u.target_rate &&
          u.achieved_rate <= u.mean_rate) {
        trigger = m;
        break;
      }
    }
    if (!trigger) continue;
    // Alone on the current channel: no channel can remove more interference.
    if (!channel_in_use_by_other(uav.channel, uav.id)) continue;

    std::optional<int> target;
    for (int c = 1; c < channels; ++c) {
      if (!channel_in_use_by_other(c, uav.id)) {
        target = c;
        break;
      }
    }

    if (!target) {
      // Every premium channel is taken: pick the one with the least
      // interference at the triggering user, provided none of this UAV's
      // premium users would see more interference than now.
      std::vector<const UserState*> kept;
      for (UserId m : uav.connected_users) {
        const UserState& u = world.users[static_cast<std::size_t>(m)];
        if (u.klass == UserClass::premium) kept.push_back(&u);
      }
      const UserState& tu = world.users[static_cast<std::size_t>(*trigger)];
      const double current = co_channel_power_mw(tu.position, uav.channel, uav.id, world.uavs, radio);
      double best = current;
      for (int c = 1; c < channels; ++c) {
        if (c == uav.channel) continue;
        const double at_trigger = co_channel_power_mw(tu.position, c, uav.id, world.uavs, radio);
        if (!(at_trigger < best)) continue;
        const bool harmless = std::all_of(kept.begin(), kept.end(), [&](const UserState* u) {
          return co_channel_power_mw(u->position, c, uav.id, world.uavs, radio) <=
                 co_channel_power_mw(u->position, uav.channel, uav.id, world.uavs, radio);
        });
        if (!harmless) continue;
        best = at_trigger;
        target = c;
      }
    }
    if (!target) continue;

    SwitchEvent ev;
    ev.time = world.time;
    ev.uav = uav.id;
    ev.from_channel = uav.channel;
    ev.to_channel = *target;
    ev.trigger_user = *trigger;
    uav.channel = *target;
    uav.last_switch_time = world.time;
    if (ev.from_channel == 0) {
      const std::vector<UserId> served = uav.connected_users;
      for (UserId m : served) {
        UserState& u = world.users[static_cast<std::size_t>(m)];
        if (u.klass == UserClass::regular) {
          release_user(world, u);
          ev.released_users.push_back(m);
        }
      }
    }
    world.switch_log.push_back(ev);
    events.push_back(std::move(ev));
  }
  return events;
}

FailureRecord inject_failures(WorldState& world, const FailureEvent& event) {
  FailureRecord record;
  record.time = world.time;
  record.fraction = event.fraction;

  std::vector<UavId> alive;
  for (const UavState& uav : world.uavs) {
    if (uav.alive) alive.push_back(uav.id);
  }
  // Round half up; the slack absorbs products like 0.3 * 15 landing a hair
  // below the half.
  auto count = static_cast<std::size_t>(std::floor(event.fraction * static_cast<double>(alive.size()) + 0.5 + 1e-9));
  count = std::min(count, alive.size());

  // Partial Fisher-Yates: the first `count` slots become a uniform sample.
  for (std::size_t k = 0; k < count; ++k) {
    const auto pick = k + static_cast<std::size_t>(world.rng.below(alive.size() - k));
    std::swap(alive[k], alive[pick]);
  }
  record.failed.assign(alive.begin(), alive.begin() + static_cast<std::ptrdiff_t>(count));
  std::sort(record.failed.begin(), record.failed.end());

  for (UavId id : record.failed) {
    UavState& uav = world.uavs[static_cast<std::size_t>(id)];
    for (UserId m : uav.connected_users) {
      UserState& u = world.users[static_cast<std::size_t>(m)];
      u.serving_uav.reset();
      u.achieved_rate = 0.0;
    }
    uav.connected_users.clear();
    uav.demand = 0;
    uav.alive = false;
    uav.velocity = {};
  }
  world.failure_log.push_back(record);
  return record;
}

void apply_due_failures(WorldState& world) {
  for (ScheduledFailure& f : world.failures) {
    if (f.applied || world.time + kTimeSlack < f.event.at_time) continue;
    inject_failures(world, f.event);
    f.applied = true;
  }
}

std::vector<Vec3> compute_controls(const WorldState& world, const KernelParams& params,
                                   ControllerMode mode) {
  std::vector<Vec3> controls(world.uavs.size());
  for (const UavState& uav : world.uavs) {
    if (!uav.alive) continue;
    controls[static_cast<std::size_t>(uav.id)] = control_input(uav.id, world.uavs, world.users, params, mode);
  }
  return controls;
}

void integrate(WorldState& world, std::span<const Vec3> controls, const ControlGains& gains) {
  for (UavState& uav : world.uavs) {
    if (!uav.alive) continue;
    Vec3 u = controls[static_cast<std::size_t>(uav.id)];
    u.z = 0.0;
    Vec3 v = uav.velocity + u * gains.dt;
    v.z = 0.0;
    uav.velocity = clamp_norm(v, gains.v_max);
    uav.position += uav.velocity * gains.dt;
    uav.position.z = world.altitude;
  }
}

void step(WorldState& world, const ControlGains& gains, const RadioParams& radio, ControllerMode mode,
          const TickObserver& observer) {
  apply_due_failures(world);
  associate_users(world, gains);
  update_rates(world, gains, radio);
  if (observer) observer(world);
  // The flocking baseline runs without the QoS-driven channel policy.
  if (mode == ControllerMode::qos_driven) maybe_switch_channel(world, gains, radio);
  const std::vector<Vec3> controls = compute_controls(world, KernelParams::from(gains), mode);
  integrate(world, controls, gains);
  world.tick += 1;
  world.time = static_cast<double>(world.tick) * gains.dt;
}

void check_invariants(const WorldState& world, const ControlGains& gains) {
  const auto capacity = static_cast<std::size_t>(std::floor(gains.n_max));
  for (const UavState& uav : world.uavs) {
    if (uav.position.z != world.altitude) fail("UAV " + std::to_string(uav.id) + " left altitude H");
    if (uav.velocity.z != 0.0) fail("UAV " + std::to_string(uav.id) + " has vertical velocity");
    if (!uav.position.finite() || !uav.velocity.finite()) fail("non-finite UAV state");
    if (uav.connected_users.size() > capacity) fail("UAV " + std::to_string(uav.id) + " over capacity");
    if (!uav.alive && !uav.connected_users.empty()) fail("failed UAV still serves users");
  }
  for (const UserState& user : world.users) {
    if (user.position.z != 0.0) fail("user above ground");
    if (!user.serving_uav) continue;
    const UavState& uav = world.uavs[static_cast<std::size_t>(*user.serving_uav)];
    if (!uav.alive) fail("user " + std::to_string(user.id) + " served by a failed UAV");
    if (distance(uav.position, user.position) > gains.r) fail("user served out of range");
    if (user.klass == UserClass::regular && uav.channel != 0) fail("regular user off L_0");
    if (!std::binary_search(uav.connected_users.begin(), uav.connected_users.end(), user.id)) {
      fail("association tables disagree");
    }
  }
}

}  // namespace uavqos
