#include "uavqos/config_io.hpp"

#include <fstream>
#include <initializer_list>
#include <sstream>

#include "json.hpp"

namespace uavqos {

using nlohmann::json;

namespace {

void reject_unknown(const json& obj, std::initializer_list<const char*> known, const std::string& where) {
  if (!obj.is_object()) throw ConfigError(where + " must be an object");
  for (const auto& [key, value] : obj.items()) {
    bool found = false;
    for (const char* k : known) {
      if (key == k) {
        found = true;
        break;
      }
    }
    if (!found) throw ConfigError("unknown key '" + key + "' in " + where);
  }
}

template <typename T>
void read(const json& obj, const char* key, T& out) {
  if (auto it = obj.find(key); it != obj.end()) out = it->get<T>();
}

Vec3 read_xy(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) throw ConfigError(where + " must be an [x, y] pair");
  return {j[0].get<double>(), j[1].get<double>(), 0.0};
}

Rect read_rect(const json& j, const std::string& where) {
  reject_unknown(j, {"x_min", "x_max", "y_min", "y_max"}, where);
  Rect r;
  read(j, "x_min", r.x_min);
  read(j, "x_max", r.x_max);
  read(j, "y_min", r.y_min);
  read(j, "y_max", r.y_max);
  return r;
}

json write_rect(const Rect& r) {
  return {{"x_min", r.x_min}, {"x_max", r.x_max}, {"y_min", r.y_min}, {"y_max", r.y_max}};
}

RadioParams read_radio(const json& j) {
  reject_unknown(j,
                 {"f_c", "delta", "eta_los", "eta_nlos", "theta_env", "xi_env", "p_t", "bandwidth",
                  "noise", "c_light", "num_channels", "plos_form"},
                 "radio");
  RadioParams r;
  read(j, "f_c", r.f_c);
  read(j, "delta", r.delta);
  read(j, "eta_los", r.eta_los);
  read(j, "eta_nlos", r.eta_nlos);
  read(j, "theta_env", r.theta_env);
  read(j, "xi_env", r.xi_env);
  read(j, "p_t", r.p_t);
  read(j, "bandwidth", r.bandwidth);
  read(j, "noise", r.noise);
  read(j, "c_light", r.c_light);
  read(j, "num_channels", r.num_channels);
  if (auto it = j.find("plos_form"); it != j.end()) r.plos_form = parse_plos_form(it->get<std::string>());
  return r;
}

json write_radio(const RadioParams& r) {
  return {{"f_c", r.f_c},
          {"delta", r.delta},
          {"eta_los", r.eta_los},
          {"eta_nlos", r.eta_nlos},
          {"theta_env", r.theta_env},
          {"xi_env", r.xi_env},
          {"p_t", r.p_t},
          {"bandwidth", r.bandwidth},
          {"noise", r.noise},
          {"c_light", r.c_light},
          {"num_channels", r.num_channels},
          {"plos_form", to_string(r.plos_form)}};
}

ControlGains read_gains(const json& j) {
  reject_unknown(j,
                 {"eps", "a", "b", "c1", "c2_reg", "c2_prem", "beta", "n_max", "r", "d", "tau", "dt",
                  "v_max", "u_max"},
                 "gains");
  ControlGains g;
  read(j, "eps", g.eps);
  read(j, "a", g.a);
  read(j, "b", g.b);
  read(j, "c1", g.c1);
  read(j, "c2_reg", g.c2_reg);
  read(j, "c2_prem", g.c2_prem);
  read(j, "beta", g.beta);
  read(j, "n_max", g.n_max);
  read(j, "r", g.r);
  read(j, "d", g.d);
  read(j, "tau", g.tau);
  read(j, "dt", g.dt);
  read(j, "v_max", g.v_max);
  read(j, "u_max", g.u_max);
  return g;
}

json write_gains(const ControlGains& g) {
  return {{"eps", g.eps},     {"a", g.a},     {"b", g.b},         {"c1", g.c1},
          {"c2_reg", g.c2_reg}, {"c2_prem", g.c2_prem}, {"beta", g.beta}, {"n_max", g.n_max},
          {"r", g.r},         {"d", g.d},     {"tau", g.tau},     {"dt", g.dt},
          {"v_max", g.v_max}, {"u_max", g.u_max}};
}

ScenarioConfig from_json(const json& j) {
  reject_unknown(j,
                 {"name", "description", "users", "user_layout", "uav_count", "uav_initial_positions",
                  "uav_region", "H", "duration", "seed", "failure_events", "controller_mode",
                  "targets", "radio", "gains"},
                 "scenario");
  ScenarioConfig c;
  read(j, "name", c.name);
  read(j, "description", c.description);
  if (auto it = j.find("users"); it != j.end()) {
    for (const json& u : *it) {
      reject_unknown(u, {"x", "y", "class"}, "users[]");
      UserSpec spec;
      spec.position = {u.at("x").get<double>(), u.at("y").get<double>(), 0.0};
      spec.klass = parse_user_class(u.at("class").get<std::string>());
      c.users.push_back(spec);
    }
  }
  if (auto it = j.find("user_layout"); it != j.end()) {
    const json& l = *it;
    reject_unknown(l, {"region", "count", "premium_fraction", "premium_width_fraction"}, "user_layout");
    UserLayout layout;
    layout.region = read_rect(l.at("region"), "user_layout.region");
    read(l, "count", layout.count);
    read(l, "premium_fraction", layout.premium_fraction);
    if (auto w = l.find("premium_width_fraction"); w != l.end()) {
      layout.premium_width_fraction = w->get<double>();
    }
    c.user_layout = layout;
  }
  read(j, "uav_count", c.uav_count);
  if (auto it = j.find("uav_initial_positions"); it != j.end()) {
    for (const json& p : *it) c.uav_initial_positions.push_back(read_xy(p, "uav_initial_positions[]"));
  }
  if (auto it = j.find("uav_region"); it != j.end()) c.uav_region = read_rect(*it, "uav_region");
  read(j, "H", c.H);
  read(j, "duration", c.duration);
  read(j, "seed", c.seed);
  if (auto it = j.find("failure_events"); it != j.end()) {
    for (const json& e : *it) {
      reject_unknown(e, {"time", "fraction"}, "failure_events[]");
      c.failure_events.push_back({e.at("time").get<double>(), e.at("fraction").get<double>()});
    }
  }
  if (auto it = j.find("controller_mode"); it != j.end()) {
    c.controller_mode = parse_controller_mode(it->get<std::string>());
  }
  if (auto it = j.find("targets"); it != j.end()) {
    reject_unknown(*it, {"premium", "regular"}, "targets");
    read(*it, "premium", c.targets.premium);
    read(*it, "regular", c.targets.regular);
  }
  if (auto it = j.find("radio"); it != j.end()) c.radio = read_radio(*it);
  if (auto it = j.find("gains"); it != j.end()) c.gains = read_gains(*it);
  return c;
}

json to_json(const ScenarioConfig& c) {
  json j = json::object();
  j["name"] = c.name;
  j["description"] = c.description;
  json users = json::array();
  for (const UserSpec& u : c.users) {
    users.push_back({{"x", u.position.x}, {"y", u.position.y}, {"class", to_string(u.klass)}});
  }
  j["users"] = users;
  if (c.user_layout) {
    json l = {{"region", write_rect(c.user_layout->region)},
              {"count", c.user_layout->count},
              {"premium_fraction", c.user_layout->premium_fraction}};
    if (c.user_layout->premium_width_fraction) {
      l["premium_width_fraction"] = *c.user_layout->premium_width_fraction;
    }
    j["user_layout"] = l;
  }
  j["uav_count"] = c.uav_count;
  json positions = json::array();
  for (const Vec3& p : c.uav_initial_positions) positions.push_back({p.x, p.y});
  j["uav_initial_positions"] = positions;
  if (c.uav_region) j["uav_region"] = write_rect(*c.uav_region);
  j["H"] = c.H;
  j["duration"] = c.duration;
  j["seed"] = c.seed;
  json events = json::array();
  for (const FailureEvent& e : c.failure_events) {
    events.push_back({{"time", e.at_time}, {"fraction", e.fraction}});
  }
  j["failure_events"] = events;
  j["controller_mode"] = to_string(c.controller_mode);
  j["targets"] = {{"premium", c.targets.premium}, {"regular", c.targets.regular}};
  j["radio"] = write_radio(c.radio);
  j["gains"] = write_gains(c.gains);
  return j;
}

}  // namespace

ScenarioConfig parse_config(const std::string& text) {
  try {
    return from_json(json::parse(text));
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed scenario document: ") + e.what());
  }
}

std::string dump_config(const ScenarioConfig& config) { return to_json(config).dump(2) + "\n"; }

ScenarioConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read scenario file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

}  // namespace uavqos
