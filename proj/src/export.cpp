#include "uavqos/export.hpp"

#include <cmath>
#include <fstream>

#include <fmt/format.h>

#include "json.hpp"

namespace uavqos {

using nlohmann::json;

namespace {

double mbps(double bits_per_s) { return bits_per_s / 1.0e6; }

// Three-decimal rounding for numbers placed in JSON documents.
double round3(double v) { return std::round(v * 1000.0) / 1000.0; }

constexpr const char* kMetricColumns =
    "premium_served_pct,premium_mean_rate_mbps,premium_fulfilled_pct,"
    "regular_served_pct,regular_mean_rate_mbps,regular_fulfilled_pct,"
    "all_served_pct,all_mean_rate_mbps,all_fulfilled_pct,p0_objective_mbps,active_channels";

void append_class(std::string& out, const ClassMetrics& c) {
  out += fmt::format("{:.3f},{:.3f},{:.3f},", c.served_pct, mbps(c.mean_rate), c.fulfilled_pct);
}

void append_metrics(std::string& out, const TickMetrics& m) {
  append_class(out, m.premium);
  append_class(out, m.regular);
  append_class(out, m.all);
  out += fmt::format("{:.3f},{}\n", mbps(m.p0_objective), m.active_channels);
}

json class_json(const ClassMetrics& c) {
  return {{"served_pct", round3(c.served_pct)},
          {"mean_rate_mbps", round3(mbps(c.mean_rate))},
          {"fulfilled_pct", round3(c.fulfilled_pct)}};
}

json metrics_json(const TickMetrics& m) {
  return {{"time", round3(m.time)},
          {"premium", class_json(m.premium)},
          {"regular", class_json(m.regular)},
          {"all", class_json(m.all)},
          {"p0_objective_mbps", round3(mbps(m.p0_objective))},
          {"active_channels", m.active_channels}};
}

}  // namespace

std::string metrics_csv(std::span<const TickMetrics> metrics) {
  std::string out = fmt::format("time,{}\n", kMetricColumns);
  for (const TickMetrics& m : metrics) {
    out += fmt::format("{:.3f},", m.time);
    append_metrics(out, m);
  }
  return out;
}

std::string sweep_csv(const SweepResult& sweep) {
  std::string out = fmt::format("uav_count,{}\n", kMetricColumns);
  for (const SweepEntry& e : sweep.entries) {
    out += fmt::format("{},", e.uav_count);
    append_metrics(out, e.steady);
  }
  return out;
}

std::string trace_csv(std::span<const TraceRow> trace) {
  std::string out = "time,uav_id,x,y,z,vx,vy,channel,alive,load\n";
  for (const TraceRow& r : trace) {
    out += fmt::format("{:.3f},{},{:.6f},{:.6f},{:.6f},{:.6f},{:.6f},{},{},{}\n", r.time, r.uav,
                       r.position.x, r.position.y, r.position.z, r.velocity.x, r.velocity.y, r.channel,
                       r.alive ? 1 : 0, r.load);
  }
  return out;
}

std::string user_trace_csv(std::span<const UserTraceRow> trace) {
  std::string out = "time,user_id,class,serving_uav,rate_mbps,mean_rate_mbps\n";
  for (const UserTraceRow& r : trace) {
    out += fmt::format("{:.3f},{},{},{},{:.3f},{:.3f}\n", r.time, r.user, to_string(r.klass),
                       r.serving_uav ? *r.serving_uav : -1, mbps(r.rate), mbps(r.mean_rate));
  }
  return out;
}

std::string run_summary_json(const RunResult& run) {
  json switches = json::array();
  for (const SwitchEvent& s : run.switches) {
    switches.push_back({{"time", round3(s.time)},
                        {"uav", s.uav},
                        {"from_channel", s.from_channel},
                        {"to_channel", s.to_channel},
                        {"trigger_user", s.trigger_user},
                        {"released_users", s.released_users}});
  }
  json failures = json::array();
  for (const FailureRecord& f : run.failures) {
    failures.push_back({{"time", round3(f.time)}, {"fraction", f.fraction}, {"failed_uavs", f.failed}});
  }
  json doc = {
      {"scenario", run.config.name},
      {"seed", run.config.seed},
      {"controller_mode", to_string(run.config.controller_mode)},
      {"ticks", run.metrics.size()},
      {"final", run.metrics.empty() ? json(nullptr) : metrics_json(run.metrics.back())},
      {"steady_state", metrics_json(steady_state(run.metrics))},
      {"switch_events", switches},
      {"failure_events", failures},
      {"violations",
       {{"min_separation_pair_ticks", run.monitor.total_too_close()},
        {"min_separation_pair_ticks_steady_state", run.monitor.steady_state_too_close()},
        {"disconnected_ticks", run.monitor.disconnected_ticks()}}},
  };
  return doc.dump(2) + "\n";
}

std::string sweep_summary_json(const ScenarioConfig& base, const SweepResult& sweep) {
  json entries = json::array();
  for (const SweepEntry& e : sweep.entries) {
    json m = metrics_json(e.steady);
    m["uav_count"] = e.uav_count;
    entries.push_back(m);
  }
  json doc = {{"scenario", base.name}, {"seed", base.seed}, {"steady_state", entries}};
  return doc.dump(2) + "\n";
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::error_code ec;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
  if (ec) throw IoError("cannot create directory " + path.parent_path().string() + ": " + ec.message());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << text;
  out.flush();
  if (!out) throw IoError("failed writing " + path.string());
}

void export_run(const RunResult& run, const std::filesystem::path& dir) {
  write_file(dir / "metrics.csv", metrics_csv(run.metrics));
  write_file(dir / "trajectory.csv", trace_csv(run.trace));
  write_file(dir / "summary.json", run_summary_json(run));
  if (!run.user_trace.empty()) write_file(dir / "user_rates.csv", user_trace_csv(run.user_trace));
}

void export_sweep(const ScenarioConfig& base, const SweepResult& sweep, const std::filesystem::path& dir) {
  write_file(dir / "sweep.csv", sweep_csv(sweep));
  write_file(dir / "sweep_summary.json", sweep_summary_json(base, sweep));
}

}  // namespace uavqos
