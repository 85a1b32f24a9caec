#pragma once

#include <span>

#include "uavqos/model.hpp"

namespace uavqos {

// One downlink evaluated against the current interference environment.
struct LinkBudget {
  double path_loss = 0.0;       // dB
  double p_los = 0.0;           // [0, 1]
  double received_power = 0.0;  // mW
  double sinr = 0.0;            // linear
  double rate = 0.0;            // bits/s
};

double dbm_to_mw(double dbm);

double los_probability(double elevation, const RadioParams& params);

// Mean air-to-ground path loss in dB. Throws std::domain_error when the two
// points coincide.
double path_loss(const Vec3& uav, const Vec3& user, const RadioParams& params);

double received_power_mw(double p_t_dbm, double path_loss_db);

// Sum of received power at `at` from every alive UAV on `channel`, skipping
// `exclude`. The sum is network-wide, not limited to neighbours.
double co_channel_power_mw(const Vec3& at, int channel, UavId exclude, std::span<const UavState> uavs,
                           const RadioParams& params);

double sinr(const UserState& user, UavId serving, std::span<const UavState> uavs,
            const RadioParams& params);

double data_rate(double sinr, double bandwidth);

LinkBudget evaluate_link(const UserState& user, UavId serving, std::span<const UavState> uavs,
                         const RadioParams& params);

// Sum over users of |C_m - rho|; unserved users count with C_m = 0.
double p0_objective(std::span<const UserState> users);

}  // namespace uavqos
