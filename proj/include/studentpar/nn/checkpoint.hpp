#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "studentpar/nn/dense.hpp"
#include "studentpar/nn/models.hpp"

namespace studentpar::nn {

enum class CheckpointFormat { Json, Binary };

// Model-agnostic container: a kind tag ("teacher", "student", "classifier")
// plus the ordered layer list.
//
// JSON layout:
//   {"format": "studentpar-checkpoint", "version": 1, "kind": "...",
//    "layers": [{"rows": R, "cols": C, "activation": "tanh"|"identity",
//                "weight": [R*C row-major], "bias": [R]}, ...]}
// Doubles are written with 17 significant digits, so values round-trip exactly.
//
// Binary layout (little-endian):
//   magic "SPCKPT\0\1" | u32 kind_len | kind bytes | u32 layer_count |
//   per layer: u32 rows | u32 cols | u8 activation (0 tanh, 1 identity) |
//              f64 weight[rows*cols] | f64 bias[rows]
// Binary round-trips are bit-exact.
struct Checkpoint {
  std::string kind;
  std::vector<DenseLayer> layers;

  friend bool operator==(const Checkpoint&, const Checkpoint&) = default;
};

void save_checkpoint(const std::filesystem::path& path, const Checkpoint& checkpoint,
                     CheckpointFormat format);
// Detects the format from the leading bytes.
Checkpoint load_checkpoint(const std::filesystem::path& path);

Checkpoint to_checkpoint(const TeacherModel& model);
Checkpoint to_checkpoint(const StudentModel& model);
Checkpoint to_checkpoint(const DenseLayer& classifier);

TeacherModel teacher_from_checkpoint(const Checkpoint& checkpoint);
StudentModel student_from_checkpoint(const Checkpoint& checkpoint);
DenseLayer classifier_from_checkpoint(const Checkpoint& checkpoint);

}  // namespace studentpar::nn
