#pragma once

#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace studentpar::perf {

struct NoWait {
  friend bool operator==(const NoWait&, const NoWait&) = default;
};

// Dynamic batching in front of the model: samples wait until B have
// accumulated or the timeout expires.
struct DynamicBatchWait {
  double timeout_ms = 10.0;
  double arrival_rps = 1000.0;

  friend bool operator==(const DynamicBatchWait&, const DynamicBatchWait&) = default;
};

using WaitModel = std::variant<NoWait, DynamicBatchWait>;

// Q(B): 0 without a queue, otherwise the mean wait of a random sample while
// B Poisson arrivals accumulate, capped by the timeout:
//   min(timeout, 1000 (B - 1) / (2 rps))
double waiting_time(const WaitModel& wait, std::size_t batch);

struct PerfFactors {
  std::size_t depth = 12;            // D
  std::size_t width = 768;           // W
  std::size_t batch = 1;             // B
  std::size_t seq_len = 128;         // N
  std::size_t parallel_models = 1;   // M
  std::size_t gpus = 1;              // G
  std::size_t group_students = 1;    // students per group; >1 across GPUs needs a gather
  double capacity = 1.25e8;          // C, work units per ms per GPU
  double pcie_tokens_per_ms = 5000;  // T; infinity disables the transfer term
  double gather_ms = 0.2;
  WaitModel wait = NoWait{};

  friend bool operator==(const PerfFactors&, const PerfFactors&) = default;
};

void validate(const PerfFactors& factors);

// max(1, ceil(W B N^2 M / (C G)))
double compute_waves(const PerfFactors& factors);
double transfer_ms(const PerfFactors& factors);
bool needs_gather(const PerfFactors& factors);

// 1000 B M / (latency G), samples per second per GPU.
double throughput_per_gpu(const PerfFactors& factors, double latency_ms);

// latency = D t_unit waves + Q(B) + B N / T + gather
class PerfModel {
 public:
  PerfModel() = default;
  explicit PerfModel(double t_unit_ms);

  // Chooses t_unit so that latency(reference) reproduces the observation.
  static PerfModel calibrate(const PerfFactors& reference, double observed_latency_ms);

  bool calibrated() const { return t_unit_.has_value(); }
  double t_unit() const;

  double compute_ms(const PerfFactors& factors) const;
  double latency(const PerfFactors& factors) const;

 private:
  std::optional<double> t_unit_;
};

struct NamedFactors {
  std::string name;
  PerfFactors factors;
};

struct FactorRow {
  std::string name;
  PerfFactors factors;
  double latency_ms = 0.0;
  double throughput_per_gpu = 0.0;
};

std::vector<FactorRow> factor_table(const PerfModel& model, std::span<const NamedFactors> rows);

// Header `name,D,W,B,N,M,G,latency_ms,throughput_per_gpu`, three decimals.
void write_factor_table_csv(std::ostream& out, std::span<const FactorRow> rows);

// BERT-base served with dynamic batching on G GPUs, the usual calibration
// reference (observed 11.6 ms).
PerfFactors bert_base_reference(std::size_t gpus, double arrival_rps = 1000.0,
                                double timeout_ms = 10.0);

// The six-row factor comparison: BERT-base, TinyBERT, DynaBERT, DeeBERT,
// Cocktail and a 2-layer student group. `sample_len` is padded to its bin's
// upper edge for the student row.
std::vector<NamedFactors> comparison_rows(std::size_t gpus, std::size_t sample_len,
                                          double arrival_rps = 1000.0, double timeout_ms = 10.0);

// Upper edge of the length bin: bin_width * ceil(n / bin_width).
std::size_t bin_upper_edge(std::size_t length, std::size_t bin_width = 8);

}  // namespace studentpar::perf
