#include "uavqos/metrics.hpp"

#include <cmath>
#include <set>

#include "uavqos/radio.hpp"

namespace uavqos {

namespace {

struct Tally {
  int users = 0;
  int served = 0;
  int fulfilled = 0;
  double rate_sum = 0.0;

  void add(const UserState& u) {
    users += 1;
    if (!u.serving_uav) return;
    served += 1;
    rate_sum += u.achieved_rate;
    if (u.achieved_rate >= u.target_rate) fulfilled += 1;
  }

  [[nodiscard]] ClassMetrics finish() const {
    if (users == 0) return {};
    const double n = users;
    return {100.0 * served / n, rate_sum / n, 100.0 * fulfilled / n};
  }
};

void accumulate(ClassMetrics& into, const ClassMetrics& from) {
  into.served_pct += from.served_pct;
  into.mean_rate += from.mean_rate;
  into.fulfilled_pct += from.fulfilled_pct;
}

void scale(ClassMetrics& m, double s) {
  m.served_pct *= s;
  m.mean_rate *= s;
  m.fulfilled_pct *= s;
}

}  // namespace

TickMetrics compute_metrics(const WorldState& world) {
  Tally premium, regular, all;
  for (const UserState& u : world.users) {
    (u.klass == UserClass::premium ? premium : regular).add(u);
    all.add(u);
  }
  TickMetrics m;
  m.time = world.time;
  m.premium = premium.finish();
  m.regular = regular.finish();
  m.all = all.finish();
  m.p0_objective = p0_objective(world.users);
  std::set<int> channels;
  for (const UavState& uav : world.uavs) {
    if (uav.alive) channels.insert(uav.channel);
  }
  m.active_channels = static_cast<int>(channels.size());
  return m;
}

TickMetrics steady_state(std::span<const TickMetrics> series) {
  if (series.empty()) return {};
  const std::size_t n = series.size();
  const std::size_t tail = std::max<std::size_t>(1, (n + 9) / 10);
  TickMetrics out;
  double channels = 0.0;
  for (std::size_t k = n - tail; k < n; ++k) {
    accumulate(out.premium, series[k].premium);
    accumulate(out.regular, series[k].regular);
    accumulate(out.all, series[k].all);
    out.p0_objective += series[k].p0_objective;
    channels += series[k].active_channels;
  }
  const double s = 1.0 / static_cast<double>(tail);
  scale(out.premium, s);
  scale(out.regular, s);
  scale(out.all, s);
  out.p0_objective *= s;
  out.active_channels = static_cast<int>(std::lround(channels * s));
  out.time = series.back().time;
  return out;
}

}  // namespace uavqos
