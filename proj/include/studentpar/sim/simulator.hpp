#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "studentpar/perf/perf_model.hpp"
#include "studentpar/sim/cluster.hpp"
#include "studentpar/sim/workload.hpp"

namespace studentpar::sim {

struct RequestRecord {
  std::uint64_t id = 0;
  double arrival_ms = 0.0;
  std::size_t length_tokens = 0;
  std::size_t node = 0;
  std::size_t k = 0;  // students serving it
  double dispatch_ms = 0.0;
  double completion_ms = 0.0;

  double latency_ms() const { return completion_ms - arrival_ms; }
};

struct SimMetrics {
  std::optional<double> avg_latency_ms;
  std::optional<double> p95_latency_ms;
  std::optional<double> throughput_per_gpu;
  std::size_t completed = 0;
  std::vector<std::pair<double, std::size_t>> student_number_timeline;
  std::vector<std::pair<double, double>> accuracy_timeline;
};

struct SimOptions {
  std::optional<double> horizon_ms;
  // Throughput counts completions inside [first, second]; default spans the
  // first arrival to the last completion.
  std::optional<std::pair<double, double>> throughput_window_ms;
};

struct SimResult {
  SimMetrics metrics;
  std::vector<RequestRecord> records;  // completed requests, by id
  std::size_t generated = 0;
  std::size_t rejected_pushes = 0;
  std::size_t waiting_at_end = 0;  // buffered, retrying or queued
  std::size_t in_flight_at_end = 0;
  std::size_t max_buffer_touched = 0;
};

SimResult run_simulation(const ClusterConfig& cluster, std::span<const Request> workload,
                         const perf::PerfModel& model, const perf::PerfFactors& base,
                         const SimOptions& options = {});

// Value at rank ceil(p/100 * n) of the sorted sample (1-based).
double nearest_rank_percentile(std::vector<double> values, double pct);

// Completions with completion time in [begin, end] per second per GPU.
double window_throughput(std::span<const RequestRecord> records, double begin_ms, double end_ms,
                         std::size_t total_gpus);

// Keys avg_latency_ms, p95_latency_ms, throughput_per_gpu, completed,
// student_number_timeline, accuracy_timeline; numbers rounded to 6 decimals,
// undefined metrics as null.
nlohmann::json metrics_to_json(const SimMetrics& metrics);
SimMetrics metrics_from_json(const nlohmann::json& doc);

void write_latency_csv(const std::filesystem::path& path, std::span<const RequestRecord> records);

double round6(double value);

}  // namespace studentpar::sim
