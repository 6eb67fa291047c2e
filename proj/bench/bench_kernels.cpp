#include <benchmark/benchmark.h>

#include "studentpar/common/rng.hpp"
#include "studentpar/distill/boosting.hpp"
#include "studentpar/kernels/batch.hpp"
#include "studentpar/nn/models.hpp"

using namespace studentpar;
using kernels::Exec;

namespace {

nn::Matrix random_inputs(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  Rng rng(seed);
  nn::Matrix m(rows, cols);
  for (std::size_t i = 0; i < m.size(); ++i) m.data()[i] = rng.uniform(-1.0, 1.0);
  return m;
}

Exec exec_of(const benchmark::State& state) { return state.range(0) ? Exec::Parallel : Exec::Serial; }

void BM_TeacherForward(benchmark::State& state) {
  Rng rng(1);
  nn::TeacherShape shape;
  const auto teacher = nn::TeacherModel::create(shape, rng);
  const auto x = random_inputs(static_cast<std::size_t>(state.range(1)), shape.input_dim, 2);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::teacher_outputs(teacher, x, exec_of(state)));
  state.SetItemsProcessed(state.iterations() * state.range(1));
}

void BM_StudentForward(benchmark::State& state) {
  Rng rng(3);
  const auto student = nn::StudentModel::create(8, 64, 2, rng);
  const auto x = random_inputs(static_cast<std::size_t>(state.range(1)), 8, 4);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::student_outputs(student, x, exec_of(state)));
  state.SetItemsProcessed(state.iterations() * state.range(1));
}

void BM_StudentEpoch(benchmark::State& state) {
  const auto rows = static_cast<std::size_t>(state.range(1));
  Rng rng(5);
  const auto init = nn::StudentModel::create(8, 16, 2, rng);
  const auto x = random_inputs(rows, 8, 6);
  const auto t = random_inputs(rows, 16, 7);
  const nn::Matrix prev(rows, 16, 0.0);
  std::vector<std::size_t> idx(rows);
  for (std::size_t i = 0; i < rows; ++i) idx[i] = i;
  distill::DistillConfig cfg;
  cfg.epochs_per_student = 1;
  cfg.batch_size = 256;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        distill::train_one_student(init, x, t, prev, idx, cfg, true, Rng(8), exec_of(state)));
  }
  state.SetItemsProcessed(state.iterations() * state.range(1));
}

void exec_args(benchmark::internal::Benchmark* b) {
  b->ArgNames({"parallel", "rows"});
  for (int parallel : {0, 1}) {
    for (int rows : {1024, 8192}) b->Args({parallel, rows});
  }
}

}  // namespace

BENCHMARK(BM_TeacherForward)->Apply(exec_args)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_StudentForward)->Apply(exec_args)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_StudentEpoch)->Apply(exec_args)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
