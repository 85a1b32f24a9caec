#pragma once

#include <vector>

#include "uavqos/metrics.hpp"
#include "uavqos/model.hpp"

namespace uavqos {

struct SweepEntry {
  int uav_count = 0;
  TickMetrics steady;
};

struct SweepResult {
  std::vector<SweepEntry> entries;  // one per swept count, input order
};

// Runs base_config once per UAV count with the same seed, so each entry is
// exactly the steady state of a plain run at that count. Runs execute
// concurrently on up to `workers` threads (0 = hardware concurrency).
SweepResult run_sweep(const ScenarioConfig& base_config, const std::vector<int>& uav_counts,
                      unsigned workers = 0);

}  // namespace uavqos
