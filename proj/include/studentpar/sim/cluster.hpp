#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "studentpar/distill/pruning.hpp"
#include "studentpar/perf/perf_model.hpp"
#include "studentpar/sim/buffer.hpp"

namespace studentpar::sim {

// gpu[j][i]: GPU of student i in group j, (i + j S) % G, for
// max(1, replicas G / S) groups.
std::vector<std::vector<std::size_t>> allocate_students(std::size_t group_size, std::size_t gpus,
                                                        std::size_t replicas);

struct ControllerConfig {
  double idle_window_ms = 120000.0;
  std::size_t min_students = 1;
  std::size_t max_students = 1;
  std::size_t initial_students = 1;  // k at t = 0
  double heartbeat_ms = 100.0;
  distill::AccuracyTable accuracy_table;  // optional; rows 1..max_students when present
};

void validate(const ControllerConfig& config);

enum class ControllerAction { Hold, DropOne, AddOne };

struct ControllerView {
  double now_ms = 0.0;
  std::size_t k = 1;
  bool buffer_full = false;                 // any node buffer at capacity
  std::optional<double> empty_since_ms;     // all buffers empty since
  std::size_t idle_students = 0;
  std::size_t occupied_students = 0;
};

ControllerAction controller_decide(const ControllerView& view, const ControllerConfig& config);

// Length-aware buffering with direct dispatch, or the dynamic-batching
// baseline that waits for `max_batch` samples or `timeout_ms`.
struct LengthAwareDispatch {};
struct DynamicBatchingDispatch {
  std::size_t max_batch = 8;
  double timeout_ms = 10.0;
};
using DispatchMode = std::variant<LengthAwareDispatch, DynamicBatchingDispatch>;

struct ClusterConfig {
  std::size_t nodes = 1;
  std::size_t gpus_per_node = 4;
  std::size_t replicas_per_gpu = 1;  // simulated MPS slots per GPU
  std::size_t student_depth = 2;
  std::size_t student_width = 256;
  bool pad_to_max = false;
  BufferConfig buffer;
  DispatchMode dispatch = LengthAwareDispatch{};
  ControllerConfig controller;
};

void validate(const ClusterConfig& config);

// One dispatched job as seen by the perf model.
struct ServiceShape {
  std::size_t batch = 1;
  std::size_t seq_len = 8;
  std::size_t k = 1;               // students in the group
  std::size_t gpus_touched = 1;    // distinct GPUs under the group
  std::size_t concurrent = 1;      // groups active on the busiest touched GPU, this one included
};

// Latency with D = student depth, W = k * student width, B, N, M =
// concurrent, G = gpus touched, no queue term; the gather applies when a
// multi-student group spans GPUs. C, T and gather_ms come from `base`.
double service_time(const ServiceShape& shape, const ClusterConfig& cluster,
                    const perf::PerfModel& model, const perf::PerfFactors& base);

}  // namespace studentpar::sim
