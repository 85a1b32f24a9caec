#include "uavqos/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

#include "uavqos/simulation.hpp"

namespace uavqos {

SweepResult run_sweep(const ScenarioConfig& base_config, const std::vector<int>& uav_counts,
                      unsigned workers) {
  if (uav_counts.empty()) throw ConfigError("sweep needs at least one UAV count");
  if (!std::is_sorted(uav_counts.begin(), uav_counts.end())) {
    throw ConfigError("sweep UAV counts must be ascending");
  }
  std::vector<ScenarioConfig> configs;
  for (int count : uav_counts) {
    ScenarioConfig c = base_config;
    c.uav_count = count;
    validate(c);
    configs.push_back(std::move(c));
  }

  SweepResult result;
  result.entries.resize(configs.size());
  std::vector<std::exception_ptr> errors(configs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < configs.size(); k = next++) {
      try {
        const RunResult r = run(configs[k]);
        result.entries[k] = {configs[k].uav_count, steady_state(r.metrics)};
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };

  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(configs.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < workers; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();

  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return result;
}

}  // namespace uavqos
