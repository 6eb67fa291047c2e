#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "studentpar/distill/dataset.hpp"
#include "studentpar/distill/ensemble.hpp"
#include "studentpar/kernels/parallel.hpp"

namespace studentpar::distill {

struct PruneConfig {
  std::size_t epochs = 40;
  std::size_t batch_size = 32;
  double learning_rate = 1e-3;
  double temperature = 1.0;
  bool train_students = true;  // false: only the classifier learns
  std::uint64_t seed = 0;
};

void validate(const PruneConfig& config);

// Parameters trained by pruning, in one list:
//   [classifier, student_0 layers..., student_1 layers..., ...]
// Multipliers stay fixed.
std::vector<nn::DenseLayer> pack_parameters(const EnsembleState& state);
void unpack_parameters(std::span<const nn::DenseLayer> packed, EnsembleState& state);

// sum_{k=1..M} softCE(classifier(B^(k)(x)), teacher_logits). When `grads` is
// non-null the gradient of the sum w.r.t. the packed parameters is added.
double prefix_loss_sample(const EnsembleState& state, std::span<const double> x,
                          std::span<const double> teacher_logits, double temperature,
                          nn::Gradients* grads);

struct AccuracyRow {
  std::size_t k = 0;
  double val_acc = 0.0;
  double test_acc = 0.0;

  friend bool operator==(const AccuracyRow&, const AccuracyRow&) = default;
};

struct AccuracyTable {
  std::vector<AccuracyRow> rows;  // k = 1..M

  std::size_t size() const { return rows.size(); }
  // Row for prefix k (1-based).
  const AccuracyRow& at(std::size_t k) const;

  friend bool operator==(const AccuracyTable&, const AccuracyTable&) = default;
};

// Header `k,val_acc,test_acc`, six decimals.
void export_accuracy_table(const AccuracyTable& table, const std::filesystem::path& path);
AccuracyTable import_accuracy_table(const std::filesystem::path& path);

// Hard-label accuracy of classifier(B^(k)) for k = 1..M.
std::vector<double> prefix_accuracy(const EnsembleState& state, const Split& split,
                                    kernels::Exec exec = kernels::Exec::Parallel);

struct PruneResult {
  EnsembleState state;
  AccuracyTable table;
  std::size_t best_k = 0;  // argmax validation accuracy, smallest k on ties
  std::vector<double> epoch_losses;
};

// One optimizer step per batch on the summed prefix losses, updating the
// classifier and every student. An empty classifier is initialized first.
PruneResult adaptive_pruning(EnsembleState state, const Matrix& teacher_train_logits,
                             const Dataset& data, const PruneConfig& config,
                             kernels::Exec exec = kernels::Exec::Parallel);

}  // namespace studentpar::distill
