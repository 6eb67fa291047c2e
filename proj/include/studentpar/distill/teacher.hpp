#pragma once

#include <cstdint>
#include <vector>

#include "studentpar/distill/dataset.hpp"
#include "studentpar/kernels/batch.hpp"
#include "studentpar/nn/models.hpp"

namespace studentpar::distill {

// Teacher final representations and logits, row-aligned with a split.
using TeacherTargets = kernels::TeacherBatch;

struct TeacherTrainConfig {
  std::size_t epochs = 40;
  std::size_t batch_size = 32;
  double learning_rate = 1e-3;
};

// Minibatch Adam on hard-label cross-entropy. Returns the mean loss per epoch.
std::vector<double> train_teacher(nn::TeacherModel& teacher, const Split& train,
                                  const TeacherTrainConfig& config, const Rng& rng,
                                  kernels::Exec exec = kernels::Exec::Parallel);

double teacher_accuracy(const nn::TeacherModel& teacher, const Split& split,
                        kernels::Exec exec = kernels::Exec::Parallel);

TeacherTargets teacher_targets(const nn::TeacherModel& teacher, const Split& split,
                               kernels::Exec exec = kernels::Exec::Parallel);

// A teacher sharing the student architecture: `body` produces the final
// representation and `head` the logits. Used for capacity-matched runs.
TeacherTargets teacher_targets(const nn::StudentModel& body, const nn::DenseLayer& head,
                               const Split& split, kernels::Exec exec = kernels::Exec::Parallel);

}  // namespace studentpar::distill
