#pragma once

#include <span>

#include "uavqos/world.hpp"

namespace uavqos {

struct ClassMetrics {
  double served_pct = 0.0;     // [0, 100]
  double mean_rate = 0.0;      // bits/s, unserved users count as 0
  double fulfilled_pct = 0.0;  // [0, 100], served and C_m >= target
};

struct TickMetrics {
  double time = 0.0;
  ClassMetrics premium;
  ClassMetrics regular;
  ClassMetrics all;
  double p0_objective = 0.0;  // bits/s
  int active_channels = 0;
};

TickMetrics compute_metrics(const WorldState& world);

// Mean over the final 10% of ticks (at least one). active_channels is the
// rounded mean.
TickMetrics steady_state(std::span<const TickMetrics> series);

}  // namespace uavqos
