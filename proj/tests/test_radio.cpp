#include <cmath>
#include <numbers>

#include "doctest.h"
#include "oracle/link_oracle.hpp"
#include "support.hpp"
#include "uavqos/radio.hpp"
#include "uavqos/rng.hpp"

using namespace uavqos;
using testing_support::uav_at;
using testing_support::user_at;

namespace {

RadioParams standard_form() {
  RadioParams p;
  p.plos_form = PlosForm::standard;
  return p;
}

}  // namespace

TEST_CASE("LoS probability") {
  const RadioParams as_written;
  const RadioParams standard = standard_form();
  CHECK(los_probability(std::numbers::pi / 2, as_written) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(los_probability(std::numbers::pi / 2, standard) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(los_probability(1e-12, as_written) == doctest::Approx(0.9642518770249235).epsilon(1e-9));
  CHECK(los_probability(1e-12, standard) == doctest::Approx(0.02451749646598645).epsilon(1e-9));

  for (const RadioParams& p : {as_written, standard}) {
    double previous = 0.0;
    for (int k = 1; k <= 1000; ++k) {
      const double v = los_probability(k * (std::numbers::pi / 2) / 1000.0, p);
      CHECK(v >= 0.0);
      CHECK(v <= 1.0);
      CHECK(v >= previous);
      previous = v;
    }
  }
}

TEST_CASE("path loss") {
  const RadioParams p;
  CHECK(path_loss({100, 0, 100}, {0, 0, 0}, p) == doctest::Approx(81.57267205902733).epsilon(1e-9));
  CHECK(path_loss({0, 0, 100}, {0, 0, 0}, p) == doctest::Approx(78.5623720993283).epsilon(1e-9));
  CHECK_THROWS_AS(path_loss({0, 0, 0}, {0, 0, 0}, p), std::domain_error);

  SUBCASE("equal excess losses make the LoS mix irrelevant") {
    RadioParams flat = p;
    flat.eta_los = flat.eta_nlos = 7.0;
    for (double x : {0.0, 50.0, 500.0, 5000.0}) {
      const double d = std::hypot(x, 100.0);
      const double fspl = 20.0 * std::log10(4.0 * std::numbers::pi * 2e9 * d / 3e8);
      CHECK(path_loss({x, 0, 100}, {0, 0, 0}, flat) == doctest::Approx(fspl + 7.0).epsilon(1e-12));
    }
  }
  SUBCASE("increasing in distance at fixed elevation") {
    for (const RadioParams& form : {p, standard_form()}) {
      double previous = -1e9;
      for (int k = 1; k <= 200; ++k) {
        const double s = 5.0 * k;  // scale the (1, 0, 1) ray
        const double v = path_loss({s, 0, s}, {0, 0, 0}, form);
        CHECK(v > previous);
        previous = v;
      }
    }
  }
}

TEST_CASE("received power") {
  CHECK(received_power_mw(37.0, 0.0) == doctest::Approx(5011.872336272722).epsilon(1e-12));
  CHECK(received_power_mw(0.0, 0.0) == 1.0);
  CHECK(received_power_mw(37.0, 78.56) == doctest::Approx(6.982324040771714e-05).epsilon(1e-9));
}

TEST_CASE("SINR") {
  RadioParams p;
  const UserState user = user_at(0, 0, 0);

  SUBCASE("received power equal to noise gives unity") {
    std::vector<UavState> uavs{uav_at(0, 0, 0)};
    p.noise = 10.0 * std::log10(received_power_mw(p.p_t, path_loss(uavs[0].position, user.position, p)));
    CHECK(sinr(user, 0, uavs, p) == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("exclusive channel is noise limited") {
    std::vector<UavState> uavs{uav_at(0, 0, 0, 100, 2), uav_at(1, 50, 0), uav_at(2, -80, 30)};
    const double pr = received_power_mw(p.p_t, path_loss(uavs[0].position, user.position, p));
    CHECK(sinr(user, 0, uavs, p) == pr / dbm_to_mw(p.noise));
  }
  SUBCASE("two equidistant co-channel UAVs") {
    std::vector<UavState> uavs{uav_at(0, 100, 0), uav_at(1, -100, 0)};
    const double pr = received_power_mw(p.p_t, path_loss(uavs[0].position, user.position, p));
    const double s = sinr(user, 0, uavs, p);
    CHECK(s == doctest::Approx(pr / (dbm_to_mw(p.noise) + pr)).epsilon(1e-12));
    CHECK(s < 1.0);
  }
  SUBCASE("interference sum is network wide and skips failed UAVs") {
    std::vector<UavState> uavs{uav_at(0, 0, 0), uav_at(1, 5000, 0), uav_at(2, 300, 0)};
    const double with_far = sinr(user, 0, uavs, p);
    uavs[1].alive = false;
    CHECK(sinr(user, 0, uavs, p) > with_far);
  }
  SUBCASE("interference never helps") {
    SplitMix64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<UavState> uavs{uav_at(0, rng.uniform(-300, 300), rng.uniform(-300, 300))};
      const double alone = sinr(user, 0, uavs, p);
      uavs.push_back(uav_at(1, rng.uniform(-900, 900), rng.uniform(-900, 900)));
      CHECK(sinr(user, 0, uavs, p) <= alone);
    }
  }
}

TEST_CASE("data rate") {
  CHECK(data_rate(1.0, 15e6) == 15e6);
  CHECK(data_rate(3.0, 15e6) == 30e6);
  CHECK(data_rate(0.0, 15e6) == 0.0);
  CHECK(data_rate(std::pow(10.0, 3.844), 15e6) == doctest::Approx(191.6e6).epsilon(1e-3));
  double previous = -1.0;
  for (int k = 0; k < 500; ++k) {
    const double v = data_rate(k * 0.37, 15e6);
    CHECK(v > previous);
    previous = v;
  }
}

TEST_CASE("P0 objective") {
  const QosTargets t;
  std::vector<UserState> users{user_at(0, 0, 0, UserClass::regular), user_at(1, 0, 0, UserClass::premium)};
  for (UserState& u : users) {
    u.serving_uav = 0;
    u.achieved_rate = u.target_rate;
  }
  CHECK(p0_objective(users) == 0.0);

  users[0].achieved_rate = 90e6;
  users[1].achieved_rate = 310e6;
  CHECK(p0_objective(users) == doctest::Approx(2e7).epsilon(1e-12));

  std::vector<UserState> lone{user_at(0, 0, 0, UserClass::regular)};
  lone[0].achieved_rate = 55e6;  // stale value is ignored when unserved
  CHECK(p0_objective(lone) == 1e8);
}

TEST_CASE("link budget matches the straight-line oracle") {
  SplitMix64 rng(20240611);
  for (bool standard : {false, true}) {
    RadioParams p;
    p.plos_form = standard ? PlosForm::standard : PlosForm::as_written;
    const oracle::Radio o{p.f_c,     p.delta,     p.eta_los, p.eta_nlos, p.theta_env, p.xi_env,
                          p.p_t,     p.bandwidth, p.noise,   p.c_light,  standard};
    for (int trial = 0; trial < 100; ++trial) {
      const UserState user = user_at(0, rng.uniform(-500, 500), rng.uniform(-500, 500));
      std::vector<UavState> uavs;
      const int n = 1 + static_cast<int>(rng.below(5));
      for (int i = 0; i < n; ++i) uavs.push_back(uav_at(i, rng.uniform(-800, 800), rng.uniform(-800, 800)));
      std::vector<oracle::Point> interferers;
      for (int i = 1; i < n; ++i) interferers.push_back({uavs[i].position.x, uavs[i].position.y, 100.0});
      const oracle::Point serving{uavs[0].position.x, uavs[0].position.y, 100.0};
      const oracle::Point at{user.position.x, user.position.y, 0.0};

      const LinkBudget link = evaluate_link(user, 0, uavs, p);
      const double want_sinr = oracle::sinr(serving, interferers, at, o);
      CHECK(link.path_loss == doctest::Approx(oracle::loss_db(serving, at, o)).epsilon(1e-9));
      CHECK(link.p_los == doctest::Approx(oracle::los_prob(serving, at, o)).epsilon(1e-9));
      CHECK(link.received_power == doctest::Approx(oracle::rx_mw(serving, at, o)).epsilon(1e-9));
      CHECK(link.sinr == doctest::Approx(want_sinr).epsilon(1e-9));
      CHECK(link.rate == doctest::Approx(oracle::rate(want_sinr, o)).epsilon(1e-9));
    }
  }
}
