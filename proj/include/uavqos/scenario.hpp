#pragma once

#include <cstdint>
#include <vector>

#include "uavqos/model.hpp"
#include "uavqos/rng.hpp"

namespace uavqos {

// Samples a layout: round-half-up(premium_fraction * count) premium users
// uniformly in the left strip, the rest uniformly in the remainder.
// Premium users come first in the returned list.
std::vector<UserSpec> generate_users(const UserLayout& layout, SplitMix64& rng);

// Expands layout and region specs into explicit users and UAV positions.
// Users are drawn before UAVs from one SplitMix64 stream seeded with `seed`,
// so the user population does not depend on uav_count.
ScenarioConfig generate_scenario(const ScenarioConfig& spec, std::uint64_t seed);

}  // namespace uavqos
