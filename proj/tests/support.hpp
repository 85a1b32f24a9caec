#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "uavqos/model.hpp"

namespace testing_support {

using namespace uavqos;

inline UavState uav_at(UavId id, double x, double y, double h = 100.0, int channel = 0) {
  UavState u;
  u.id = id;
  u.position = {x, y, h};
  u.channel = channel;
  return u;
}

inline UserState user_at(UserId id, double x, double y, UserClass k = UserClass::regular,
                         const QosTargets& targets = {}) {
  UserState u;
  u.id = id;
  u.position = {x, y, 0.0};
  u.klass = k;
  u.target_rate = targets.for_class(k);
  return u;
}

inline std::filesystem::path scenario_path(const std::string& name) {
  return std::filesystem::path(UAVQOS_SCENARIO_DIR) / (name + ".json");
}

}  // namespace testing_support
