#pragma once

#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "uavqos/vec3.hpp"

namespace uavqos {

using UavId = int;
using UserId = int;

enum class UserClass { premium, regular };
enum class ControllerMode { qos_driven, flocking_baseline };
// as_written keeps the exponent of the LoS probability exactly as published,
// standard uses the usual -xi * (theta_deg - vartheta) grouping.
enum class PlosForm { as_written, standard };

// Raised for scenario documents or parameter sets that fail validation.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when a file cannot be read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RadioParams {
  double f_c = 2.0e9;        // Hz
  double delta = 2.0;        // path-loss exponent
  double eta_los = 0.1;      // dB
  double eta_nlos = 21.0;    // dB
  double theta_env = 4.88;
  double xi_env = 0.43;
  double p_t = 37.0;         // dBm
  double bandwidth = 15.0e6; // Hz
  double noise = -80.0;      // dBm
  double c_light = 3.0e8;    // m/s
  int num_channels = 8;
  PlosForm plos_form = PlosForm::as_written;

  friend bool operator==(const RadioParams&, const RadioParams&) = default;
};

struct ControlGains {
  double eps = 0.1;
  double a = 5.0;
  double b = 5.0;
  double c1 = 6.0;
  double c2_reg = 4.0;
  double c2_prem = 6.0;
  double beta = 1.5;
  double n_max = 80.0;
  double r = 300.0;   // m
  double d = 100.0;   // m
  double tau = 5.0;   // s
  double dt = 0.1;    // s
  double v_max = 20.0;  // m/s
  double u_max = 10.0;  // m/s^2

  friend bool operator==(const ControlGains&, const ControlGains&) = default;
};

struct QosTargets {
  double premium = 300.0e6;  // bits/s
  double regular = 100.0e6;  // bits/s

  [[nodiscard]] double for_class(UserClass k) const {
    return k == UserClass::premium ? premium : regular;
  }
  friend bool operator==(const QosTargets&, const QosTargets&) = default;
};

struct UavState {
  UavId id = 0;
  Vec3 position;
  Vec3 velocity;
  int channel = 0;
  std::vector<UserId> connected_users;  // ascending
  bool alive = true;
  double last_switch_time = 0.0;
  // Users whose first choice was this UAV in the last association, before
  // capacity spill. Equals |connected_users| unless the UAV is oversubscribed.
  int demand = 0;
};

struct RateSample {
  double time = 0.0;
  double rate = 0.0;
};

struct UserState {
  UserId id = 0;
  Vec3 position;
  UserClass klass = UserClass::regular;
  double target_rate = 0.0;
  std::optional<UavId> serving_uav;
  double achieved_rate = 0.0;
  std::deque<RateSample> rate_window;
  double mean_rate = 0.0;
};

struct FailureEvent {
  double at_time = 0.0;
  double fraction = 0.0;
  friend bool operator==(const FailureEvent&, const FailureEvent&) = default;
};

struct UserSpec {
  Vec3 position;
  UserClass klass = UserClass::regular;
  friend bool operator==(const UserSpec&, const UserSpec&) = default;
};

struct Rect {
  double x_min = 0.0;
  double x_max = 0.0;
  double y_min = 0.0;
  double y_max = 0.0;

  [[nodiscard]] double width() const { return x_max - x_min; }
  [[nodiscard]] double height() const { return y_max - y_min; }
  friend bool operator==(const Rect&, const Rect&) = default;
};

// Random user placement: premium users fill the left strip of the
// rectangle, regular users the remainder.
struct UserLayout {
  Rect region;
  int count = 0;
  double premium_fraction = 0.0;
  // Width of the premium strip as a fraction of the rectangle width.
  // Defaults to premium_fraction so both classes have the same density.
  std::optional<double> premium_width_fraction;

  [[nodiscard]] double premium_strip() const {
    return premium_width_fraction.value_or(premium_fraction);
  }
  friend bool operator==(const UserLayout&, const UserLayout&) = default;
};

struct ScenarioConfig {
  std::string name;
  std::string description;
  std::vector<UserSpec> users;
  std::optional<UserLayout> user_layout;
  int uav_count = 0;
  std::vector<Vec3> uav_initial_positions;  // z ignored, pinned to H
  std::optional<Rect> uav_region;
  double H = 100.0;
  double duration = 30.0;
  std::uint64_t seed = 1;
  std::vector<FailureEvent> failure_events;
  ControllerMode controller_mode = ControllerMode::qos_driven;
  QosTargets targets;
  RadioParams radio;
  ControlGains gains;

  friend bool operator==(const ScenarioConfig&, const ScenarioConfig&) = default;
};

double distance(const Vec3& a, const Vec3& b);

// Angle between the ground plane and the UAV-user ray, in (0, pi/2].
double elevation_angle(const Vec3& uav, const Vec3& user);

// Alive UAVs other than uav_id within range r, ascending by id.
std::vector<UavId> neighbor_set(UavId uav_id, std::span<const UavState> uavs, double r);

void validate(const RadioParams& radio);
void validate(const ControlGains& gains);
// Throws ConfigError naming the first violated constraint.
void validate(const ScenarioConfig& config);

std::string to_string(UserClass k);
std::string to_string(ControllerMode m);
std::string to_string(PlosForm f);
UserClass parse_user_class(const std::string& s);
ControllerMode parse_controller_mode(const std::string& s);
PlosForm parse_plos_form(const std::string& s);

}  // namespace uavqos
