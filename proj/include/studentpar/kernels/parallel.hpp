#pragma once

#include <cstddef>
#include <cstdint>
#include <exception>
#include <vector>

namespace studentpar::kernels {

// Serial is the reference path kept for testing and benchmarking; Parallel
// spreads independent samples over OpenMP threads. Both produce bitwise
// identical results because reductions always run in sample order.
enum class Exec { Serial, Parallel };

// Runs fn(i) for i in [0, count). Exceptions thrown inside worker threads are
// rethrown on the calling thread (first one wins).
template <class Fn>
void for_each_index(std::size_t count, Fn&& fn, Exec exec) {
  if (exec == Exec::Serial) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::exception_ptr error;
  const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      fn(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(studentpar_for_each_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

// Deterministic map-reduce over samples: fn(i, accumulator) fills a fresh
// copy of `zero` and returns the sample's loss. Per-sample results are summed
// into `total` in index order; the returned value is the summed loss.
template <class Accum, class Fn>
double reduce_samples(std::size_t count, const Accum& zero, Accum& total, Fn&& fn, Exec exec) {
  double loss = 0.0;
  if (exec == Exec::Serial) {
    for (std::size_t i = 0; i < count; ++i) {
      Accum sample = zero;
      loss += fn(i, sample);
      total += sample;
    }
    return loss;
  }
  std::vector<Accum> per_sample(count, zero);
  std::vector<double> losses(count, 0.0);
  for_each_index(count, [&](std::size_t i) { losses[i] = fn(i, per_sample[i]); }, Exec::Parallel);
  for (std::size_t i = 0; i < count; ++i) {
    loss += losses[i];
    total += per_sample[i];
  }
  return loss;
}

int max_threads();

}  // namespace studentpar::kernels
