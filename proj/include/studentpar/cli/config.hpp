#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "studentpar/distill/boosting.hpp"
#include "studentpar/distill/pruning.hpp"
#include "studentpar/nn/models.hpp"
#include "studentpar/perf/perf_model.hpp"
#include "studentpar/sim/cluster.hpp"
#include "studentpar/sim/simulator.hpp"
#include "studentpar/sim/workload.hpp"

namespace studentpar::cli {

using nlohmann::json;

// Reads one JSON object field by field and rejects keys nobody asked for.
// Every failure is an InputError naming the dotted path of the offending key.
class ObjectReader {
 public:
  ObjectReader(const json& object, std::string where);

  bool has(const std::string& key) const;
  const json& raw(const std::string& key);  // must exist
  std::string path(const std::string& key) const { return where_ + "." + key; }

  void read(const std::string& key, double& out);
  void read(const std::string& key, std::size_t& out);
  void read(const std::string& key, bool& out);
  void read(const std::string& key, std::string& out);

  template <class T>
  T require(const std::string& key) {
    if (!has(key)) throw_missing(key);
    T value{};
    read(key, value);
    return value;
  }

  // Throws on the first key that was never read.
  void finish() const;

 private:
  [[noreturn]] void throw_missing(const std::string& key) const;
  const json* take(const std::string& key);

  const json& object_;
  std::string where_;
  std::set<std::string> used_;
};

enum class Mode { Distill, Prune, Simulate, Perf, Report };
std::string to_string(Mode mode);
Mode parse_mode(const std::string& text);

enum class TeacherKind { Residual, Matched };

struct DistillRun {
  distill::TaskConfig task;
  TeacherKind teacher_kind = TeacherKind::Residual;
  nn::TeacherShape teacher;  // input_dim and classes follow the task
  distill::TeacherTrainConfig teacher_train;
  std::optional<std::filesystem::path> teacher_checkpoint;
  distill::DistillConfig distill;  // seed comes from the run
};

struct PruneRun {
  std::filesystem::path distill_dir;
  distill::PruneConfig prune;
  bool baseline = false;  // also prune a 1-student group for comparison
};

struct ModelSetup {
  perf::PerfFactors base;                 // C, T and gather for every job
  std::optional<double> t_unit_ms;        // given directly, or
  perf::PerfFactors reference;            // calibrated against
  double observed_ms = 11.6;
};

struct SimulateRun {
  sim::ClusterConfig cluster;
  sim::WorkloadSpec workload;
  ModelSetup model;
  sim::SimOptions options;
  std::optional<std::filesystem::path> accuracy_table;
};

struct PerfRun {
  ModelSetup model;
  std::vector<perf::NamedFactors> rows;
};

struct ReportInput {
  std::string name;
  std::filesystem::path path;
};

struct ReportRun {
  std::vector<ReportInput> inputs;
};

struct RunConfig {
  Mode mode = Mode::Distill;
  std::uint64_t seed = 0;
  std::filesystem::path out;
  json echo;  // effective document, seed and out resolved
  std::optional<DistillRun> distill;
  std::optional<PruneRun> prune;
  std::optional<SimulateRun> simulate;
  std::optional<PerfRun> perf;
  std::optional<ReportRun> report;
};

struct Overrides {
  std::optional<std::uint64_t> seed;
  std::optional<std::filesystem::path> out;
  std::vector<std::filesystem::path> report_inputs;
};

// Relative paths inside the document resolve against `base_dir`.
RunConfig parse_run_config(const json& doc, Mode expected, const Overrides& overrides,
                           const std::filesystem::path& base_dir);
RunConfig load_run_config(const std::filesystem::path& path, Mode expected,
                          const Overrides& overrides);

json read_json_file(const std::filesystem::path& path);

perf::PerfFactors parse_factors(const json& object, const std::string& where,
                                perf::PerfFactors defaults);
json factors_to_json(const perf::PerfFactors& factors);
perf::PerfModel build_model(const ModelSetup& setup);

}  // namespace studentpar::cli
