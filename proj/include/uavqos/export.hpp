#pragma once

#include <filesystem>
#include <span>
#include <string>

#include "uavqos/simulation.hpp"
#include "uavqos/sweep.hpp"

namespace uavqos {

// Text renderers. Rates are written in Mbps with three decimals; column
// order is fixed.
std::string metrics_csv(std::span<const TickMetrics> metrics);
std::string sweep_csv(const SweepResult& sweep);
std::string trace_csv(std::span<const TraceRow> trace);
std::string user_trace_csv(std::span<const UserTraceRow> trace);
std::string run_summary_json(const RunResult& run);
std::string sweep_summary_json(const ScenarioConfig& base, const SweepResult& sweep);

// Writes text to path, creating parent directories. Throws IoError.
void write_file(const std::filesystem::path& path, const std::string& text);

// Writes metrics.csv, trajectory.csv, summary.json and, when the run kept a
// user trace, user_rates.csv into dir.
void export_run(const RunResult& run, const std::filesystem::path& dir);

// Writes sweep.csv and sweep_summary.json into dir.
void export_sweep(const ScenarioConfig& base, const SweepResult& sweep, const std::filesystem::path& dir);

}  // namespace uavqos
