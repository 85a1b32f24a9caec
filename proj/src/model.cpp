#include "uavqos/model.hpp"

#include <cmath>

namespace uavqos {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw ConfigError(what);
}

bool finite(double v) { return std::isfinite(v); }

}  // namespace

double distance(const Vec3& a, const Vec3& b) { return (a - b).norm(); }

double elevation_angle(const Vec3& uav, const Vec3& user) {
  const double horizontal = std::hypot(uav.x - user.x, uav.y - user.y);
  return std::atan2(uav.z - user.z, horizontal);
}

std::vector<UavId> neighbor_set(UavId uav_id, std::span<const UavState> uavs, double r) {
  std::vector<UavId> out;
  const UavState& self = uavs[static_cast<std::size_t>(uav_id)];
  for (const UavState& other : uavs) {
    if (other.id == uav_id || !other.alive) continue;
    if (distance(self.position, other.position) <= r) out.push_back(other.id);
  }
  return out;
}

void validate(const RadioParams& radio) {
  require(finite(radio.f_c) && radio.f_c > 0.0, "radio.f_c must be > 0");
  require(finite(radio.bandwidth) && radio.bandwidth > 0.0, "radio.bandwidth must be > 0");
  require(finite(radio.delta) && radio.delta > 0.0, "radio.delta must be > 0");
  require(finite(radio.c_light) && radio.c_light > 0.0, "radio.c_light must be > 0");
  require(radio.num_channels >= 1, "radio.num_channels must be >= 1");
  require(finite(radio.eta_los) && finite(radio.eta_nlos) && finite(radio.theta_env) &&
              finite(radio.xi_env) && finite(radio.p_t) && finite(radio.noise),
          "radio parameters must be finite");
}

void validate(const ControlGains& g) {
  require(finite(g.eps) && g.eps > 0.0, "gains.eps must be > 0");
  require(finite(g.a) && g.a > 0.0, "gains.a must be > 0");
  require(finite(g.b) && g.b > 0.0, "gains.b must be > 0");
  require(finite(g.d) && finite(g.r) && g.d > 0.0 && g.d < g.r, "gains must satisfy 0 < d < r");
  require(finite(g.c1) && finite(g.c2_reg) && finite(g.c2_prem), "gains.c* must be finite");
  require(std::abs(g.c2_prem - 1.5 * g.c2_reg) <= 1e-12 * std::max(1.0, std::abs(g.c2_reg)),
          "gains.c2_prem must equal 1.5 * gains.c2_reg");
  require(finite(g.beta) && g.beta > 0.0, "gains.beta must be > 0");
  require(finite(g.n_max) && g.n_max >= 1.0, "gains.n_max must be >= 1");
  require(finite(g.tau) && g.tau > 0.0, "gains.tau must be > 0");
  require(finite(g.dt) && g.dt > 0.0, "gains.dt must be > 0");
  require(finite(g.v_max) && g.v_max > 0.0, "gains.v_max must be > 0");
  require(finite(g.u_max) && g.u_max > 0.0, "gains.u_max must be > 0");
}

void validate(const ScenarioConfig& c) {
  validate(c.radio);
  validate(c.gains);
  require(finite(c.H) && c.H > 0.0, "H must be > 0");
  require(finite(c.duration) && c.duration >= 0.0, "duration must be >= 0");
  require(c.uav_count >= 0, "uav_count must be >= 0");
  require(c.targets.regular > 0.0 && c.targets.premium > c.targets.regular,
          "targets must satisfy premium > regular > 0");
  for (const FailureEvent& e : c.failure_events) {
    require(finite(e.at_time) && e.at_time >= 0.0, "failure event time must be >= 0");
    require(finite(e.fraction) && e.fraction >= 0.0 && e.fraction <= 1.0,
            "failure event fraction must lie in [0, 1]");
  }
  for (const UserSpec& u : c.users) {
    require(u.position.finite(), "user positions must be finite");
    require(u.position.z == 0.0, "user positions must lie on the ground (z = 0)");
  }
  if (c.user_layout) {
    const UserLayout& l = *c.user_layout;
    require(l.region.width() > 0.0 && l.region.height() > 0.0,
            "user_layout region must have positive width and height");
    require(l.count >= 0, "user_layout.count must be >= 0");
    require(l.premium_fraction >= 0.0 && l.premium_fraction <= 1.0,
            "user_layout.premium_fraction must lie in [0, 1]");
    const double strip = l.premium_strip();
    require(strip >= 0.0 && strip <= 1.0, "user_layout.premium_width_fraction must lie in [0, 1]");
    require(l.premium_fraction == 0.0 || strip > 0.0,
            "premium users need a premium strip of positive width");
    require(l.premium_fraction == 1.0 || strip < 1.0,
            "regular users need a regular strip of positive width");
  }
  for (const Vec3& p : c.uav_initial_positions) {
    require(p.finite(), "uav_initial_positions must be finite");
  }
  if (c.uav_region) {
    require(c.uav_region->width() >= 0.0 && c.uav_region->height() >= 0.0,
            "uav_region must not be inverted");
  }
  require(static_cast<std::size_t>(c.uav_count) <= c.uav_initial_positions.size() ||
              c.uav_region.has_value(),
          "uav_count exceeds uav_initial_positions and no uav_region is given");
}

std::string to_string(UserClass k) { return k == UserClass::premium ? "premium" : "regular"; }

std::string to_string(ControllerMode m) {
  return m == ControllerMode::qos_driven ? "qos_driven" : "flocking_baseline";
}

std::string to_string(PlosForm f) { return f == PlosForm::as_written ? "as_written" : "standard"; }

UserClass parse_user_class(const std::string& s) {
  if (s == "premium") return UserClass::premium;
  if (s == "regular") return UserClass::regular;
  throw ConfigError("unknown user class '" + s + "'");
}

ControllerMode parse_controller_mode(const std::string& s) {
  if (s == "qos_driven" || s == "qos") return ControllerMode::qos_driven;
  if (s == "flocking_baseline" || s == "flocking") return ControllerMode::flocking_baseline;
  throw ConfigError("unknown controller mode '" + s + "'");
}

PlosForm parse_plos_form(const std::string& s) {
  if (s == "as_written") return PlosForm::as_written;
  if (s == "standard") return PlosForm::standard;
  throw ConfigError("unknown plos_form '" + s + "'");
}

}  // namespace uavqos
