#include "uavqos/radio.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace uavqos {

double dbm_to_mw(double dbm) { return std::pow(10.0, dbm / 10.0); }

double los_probability(double elevation, const RadioParams& params) {
  const double theta_deg = elevation * 180.0 / std::numbers::pi;
  const double exponent = params.plos_form == PlosForm::as_written
                              ? -params.xi_env * theta_deg - params.theta_env
                              : -params.xi_env * (theta_deg - params.theta_env);
  return 1.0 / (1.0 + params.theta_env * std::exp(exponent));
}

double path_loss(const Vec3& uav, const Vec3& user, const RadioParams& params) {
  const double d = distance(uav, user);
  if (!(d > 0.0)) throw std::domain_error("path_loss: UAV and user coincide");
  const double p_los = los_probability(elevation_angle(uav, user), params);
  const double free_space =
      10.0 * params.delta * std::log10(4.0 * std::numbers::pi * params.f_c * d / params.c_light);
  return free_space + p_los * params.eta_los + (1.0 - p_los) * params.eta_nlos;
}

double received_power_mw(double p_t_dbm, double path_loss_db) {
  return dbm_to_mw(p_t_dbm) / std::pow(10.0, path_loss_db / 10.0);
}

double co_channel_power_mw(const Vec3& at, int channel, UavId exclude, std::span<const UavState> uavs,
                           const RadioParams& params) {
  double total = 0.0;
  for (const UavState& k : uavs) {
    if (!k.alive || k.id == exclude || k.channel != channel) continue;
    total += received_power_mw(params.p_t, path_loss(k.position, at, params));
  }
  return total;
}

double sinr(const UserState& user, UavId serving, std::span<const UavState> uavs,
            const RadioParams& params) {
  return evaluate_link(user, serving, uavs, params).sinr;
}

double data_rate(double sinr, double bandwidth) { return bandwidth * std::log2(1.0 + sinr); }

LinkBudget evaluate_link(const UserState& user, UavId serving, std::span<const UavState> uavs,
                         const RadioParams& params) {
  const UavState& tx = uavs[static_cast<std::size_t>(serving)];
  LinkBudget link;
  link.p_los = los_probability(elevation_angle(tx.position, user.position), params);
  link.path_loss = path_loss(tx.position, user.position, params);
  link.received_power = received_power_mw(params.p_t, link.path_loss);
  const double interference = co_channel_power_mw(user.position, tx.channel, serving, uavs, params);
  link.sinr = link.received_power / (dbm_to_mw(params.noise) + interference);
  link.rate = data_rate(link.sinr, params.bandwidth);
  return link;
}

double p0_objective(std::span<const UserState> users) {
  double total = 0.0;
  for (const UserState& u : users) {
    const double achieved = u.serving_uav ? u.achieved_rate : 0.0;
    total += std::abs(achieved - u.target_rate);
  }
  return total;
}

}  // namespace uavqos
