#pragma once

#include <cstdint>
#include <filesystem>
#include <variant>
#include <vector>

namespace studentpar::sim {

struct Request {
  std::uint64_t id = 0;
  double arrival_ms = 0.0;
  std::size_t length_tokens = 1;

  friend bool operator==(const Request&, const Request&) = default;
};

// Piecewise-uniform length histogram: a bucket is chosen by weight, then a
// length uniformly inside [lo, hi].
struct LengthBucket {
  std::size_t lo = 1;
  std::size_t hi = 128;
  double weight = 1.0;
};

struct LengthDistribution {
  std::vector<LengthBucket> buckets{{1, 32, 0.5}, {33, 64, 0.3}, {65, 128, 0.2}};
};

struct PoissonPhase {
  double rps = 100.0;
  double duration_ms = 1000.0;
};

// Consecutive Poisson phases; a single phase is a plain Poisson workload.
struct PoissonSpec {
  std::vector<PoissonPhase> phases{PoissonPhase{}};
  LengthDistribution lengths;
};

// CSV with header `arrival_ms,length_tokens`; arrival times are multiplied by
// `scale`. Lengths above max_len are clipped.
struct TraceSpec {
  std::filesystem::path path;
  double scale = 1.0;
};

using WorkloadSpec = std::variant<PoissonSpec, TraceSpec>;

std::vector<Request> generate_workload(const WorkloadSpec& spec, std::size_t max_len,
                                       std::uint64_t seed);

std::vector<Request> read_trace(const TraceSpec& spec, std::size_t max_len);
void write_trace(const std::filesystem::path& path, const std::vector<Request>& requests);

}  // namespace studentpar::sim
