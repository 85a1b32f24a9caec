#include "doctest.h"
#include "support.hpp"
#include "uavqos/config_io.hpp"
#include "uavqos/rng.hpp"

using namespace uavqos;

namespace {

ScenarioConfig random_config(SplitMix64& rng) {
  ScenarioConfig c;
  c.name = "cfg" + std::to_string(rng.below(1000));
  c.description = "random";
  const int users = static_cast<int>(rng.below(6));
  for (int m = 0; m < users; ++m) {
    c.users.push_back({{rng.uniform(-1e3, 1e3), rng.uniform(-1e3, 1e3), 0.0},
                       rng.below(2) ? UserClass::premium : UserClass::regular});
  }
  if (rng.below(2)) {
    UserLayout l{{0.0, rng.uniform(1, 5000), 0.0, rng.uniform(1, 500)},
                 static_cast<int>(rng.below(700)), rng.uniform(), std::nullopt};
    if (rng.below(2)) l.premium_width_fraction = rng.uniform();
    c.user_layout = l;
  }
  c.uav_count = static_cast<int>(rng.below(4));
  for (int i = 0; i < c.uav_count; ++i) c.uav_initial_positions.push_back({rng.uniform(-500, 500), rng.uniform(-500, 500), 0.0});
  if (rng.below(2)) c.uav_region = Rect{-1.0, rng.uniform(0, 100), -2.0, rng.uniform(0, 100)};
  c.H = rng.uniform(50, 150);
  c.duration = rng.uniform(0, 100);
  c.seed = rng.next();
  if (rng.below(2)) c.failure_events.push_back({rng.uniform(0, 30), rng.uniform()});
  c.controller_mode = rng.below(2) ? ControllerMode::qos_driven : ControllerMode::flocking_baseline;
  c.radio.plos_form = rng.below(2) ? PlosForm::as_written : PlosForm::standard;
  c.radio.delta = rng.uniform(1.5, 4.0);
  c.radio.num_channels = 1 + static_cast<int>(rng.below(10));
  c.gains.c2_reg = rng.uniform(1, 10);
  c.gains.c2_prem = 1.5 * c.gains.c2_reg;
  c.gains.dt = rng.uniform(0.01, 0.5);
  c.targets.premium = rng.uniform(2e8, 4e8);
  return c;
}

}  // namespace

TEST_CASE("scenario documents round-trip losslessly") {
  SplitMix64 rng(4242);
  for (int trial = 0; trial < 200; ++trial) {
    const ScenarioConfig c = random_config(rng);
    const ScenarioConfig back = parse_config(dump_config(c));
    CHECK(back == c);
    CHECK(dump_config(back) == dump_config(c));
  }
}

TEST_CASE("missing keys take defaults") {
  const ScenarioConfig c = parse_config(R"({"uav_count": 0})");
  CHECK(c.radio == RadioParams{});
  CHECK(c.gains == ControlGains{});
  CHECK(c.H == 100.0);
}

TEST_CASE("unknown keys are rejected") {
  CHECK_THROWS_AS(parse_config(R"({"uav_cnt": 3})"), ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"radio": {"fc": 2e9}})"), ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"gains": {"gamma": 0.2}})"), ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"users": [{"x": 0, "y": 0, "class": "premium", "z": 1}]})"), ConfigError);
}

TEST_CASE("malformed documents") {
  CHECK_THROWS_AS(parse_config("{not json"), ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"users": [{"x": 0, "y": 0, "class": "gold"}]})"), ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"controller_mode": "random"})"), ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"uav_initial_positions": [[1, 2, 3]]})"), ConfigError);
}

TEST_CASE("shipped scenarios load and validate") {
  for (const char* name : {"fig3_three_users", "fig5_parade", "sweep_base"}) {
    CAPTURE(name);
    const ScenarioConfig c = load_config(testing_support::scenario_path(name));
    CHECK_NOTHROW(validate(c));
    CHECK(c.name == name);
  }
  CHECK_THROWS_AS(load_config("/nonexistent/scenario.json"), IoError);
}
