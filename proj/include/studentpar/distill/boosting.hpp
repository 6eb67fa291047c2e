#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "studentpar/distill/dataset.hpp"
#include "studentpar/distill/ensemble.hpp"
#include "studentpar/distill/teacher.hpp"
#include "studentpar/kernels/parallel.hpp"

namespace studentpar::distill {

struct DistillConfig {
  double lambda_stack = 1.0;
  double subsample_top_pct = 20.0;   // a: largest-residual samples
  double subsample_rand_pct = 20.0;  // b: uniform draw from the remainder
  std::size_t max_students = 8;
  std::size_t student_depth = 2;
  std::size_t epochs_per_student = 60;
  std::size_t batch_size = 32;
  double learning_rate = 1e-3;
  double soft_ce_temperature = 1.0;
  std::size_t overfit_patience = 1;
  std::uint64_t seed = 0;
};

void validate(const DistillConfig& config);

// One boosting round. `inner_product` and `step_size` are measured on the
// full training split, `residual_mse` (1/2 ||T - B||^2 per sample) on the
// validation split after the round's student joins with its step size.
struct ConvergenceRecord {
  std::size_t round = 0;
  double residual_mse = 0.0;
  double train_residual_mse = 0.0;
  double inner_product = 0.0;
  double step_size = 0.0;
  bool halted = false;
  double lipschitz = 1.0;
  bool kept = true;  // false when the student was discarded at the stop
  std::size_t subset_size = 0;
  double first_epoch_loss = 0.0;
  double last_epoch_loss = 0.0;
};

enum class StopReason { MaxStudents, Overfitting, Halted };
std::string to_string(StopReason reason);

struct TrainedStudent {
  nn::StudentModel model;
  std::vector<double> epoch_losses;  // mean combined loss per epoch
};

// Trains `init` on the rows listed in `indices` against fixed targets.
// `prev_reps` holds B^(i-1) per training row (zeros for the first student).
TrainedStudent train_one_student(nn::StudentModel init, const Matrix& inputs,
                                 const Matrix& teacher_reps, const Matrix& prev_reps,
                                 std::span<const std::size_t> indices, const DistillConfig& config,
                                 bool with_stack, const Rng& rng,
                                 kernels::Exec exec = kernels::Exec::Parallel);

struct SequentialResult {
  EnsembleState state;
  std::vector<ConvergenceRecord> records;
  StopReason stop = StopReason::MaxStudents;
};

// Sequential boosting: each round copies the previous student (or starts
// from `seed_student`/fresh init), trains it on a residual-weighted subset,
// fits its multiplier by line search and stops on overfitting, halting or
// max_students.
SequentialResult sequential_training(const TeacherTargets& train_targets,
                                     const TeacherTargets& validation_targets, const Dataset& data,
                                     const DistillConfig& config,
                                     std::optional<nn::StudentModel> seed_student = std::nullopt,
                                     kernels::Exec exec = kernels::Exec::Parallel);

SequentialResult sequential_training(const nn::TeacherModel& teacher, const Dataset& data,
                                     const DistillConfig& config,
                                     kernels::Exec exec = kernels::Exec::Parallel);

// Mean over rows of 1/2 ||T - B||^2.
double residual_mse(const Matrix& teacher_reps, const Matrix& ensemble_reps);

}  // namespace studentpar::distill
