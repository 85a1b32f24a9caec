#include "uavqos/scenario.hpp"

#include <cmath>

namespace uavqos {

std::vector<UserSpec> generate_users(const UserLayout& layout, SplitMix64& rng) {
  const auto premium =
      static_cast<int>(std::floor(layout.premium_fraction * layout.count + 0.5 + 1e-9));
  const double split = layout.region.x_min + layout.premium_strip() * layout.region.width();

  std::vector<UserSpec> users;
  users.reserve(static_cast<std::size_t>(layout.count));
  for (int m = 0; m < layout.count; ++m) {
    const bool is_premium = m < premium;
    const double x0 = is_premium ? layout.region.x_min : split;
    const double x1 = is_premium ? split : layout.region.x_max;
    UserSpec u;
    u.klass = is_premium ? UserClass::premium : UserClass::regular;
    u.position.x = rng.uniform(x0, x1);
    u.position.y = rng.uniform(layout.region.y_min, layout.region.y_max);
    users.push_back(u);
  }
  return users;
}

ScenarioConfig generate_scenario(const ScenarioConfig& spec, std::uint64_t seed) {
  ScenarioConfig out = spec;
  out.seed = seed;
  SplitMix64 rng(seed);
  if (spec.user_layout) {
    const std::vector<UserSpec> sampled = generate_users(*spec.user_layout, rng);
    out.users.insert(out.users.end(), sampled.begin(), sampled.end());
    out.user_layout.reset();
  }
  out.uav_initial_positions.resize(
      std::min(out.uav_initial_positions.size(), static_cast<std::size_t>(spec.uav_count)));
  while (out.uav_initial_positions.size() < static_cast<std::size_t>(spec.uav_count)) {
    if (!spec.uav_region) throw ConfigError("uav_count exceeds uav_initial_positions and no uav_region is given");
    const Rect& r = *spec.uav_region;
    const double x = rng.uniform(r.x_min, r.x_max);
    const double y = rng.uniform(r.y_min, r.y_max);
    out.uav_initial_positions.push_back({x, y, 0.0});
  }
  out.uav_region.reset();
  return out;
}

}  // namespace uavqos
