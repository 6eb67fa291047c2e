#pragma once

#include <span>
#include <vector>

#include "studentpar/common/rng.hpp"
#include "studentpar/nn/dense.hpp"

namespace studentpar::nn {

struct TeacherShape {
  std::size_t input_dim = 8;
  std::size_t width = 16;   // representation width d
  std::size_t hidden = 32;  // residual branch hidden width
  std::size_t depth = 12;   // residual blocks
  std::size_t classes = 2;
  double residual_scale = 0.1;  // multiplies the Glorot init of each block's outer layer
};

// Deep residual dense network: h_0 = input_proj(x), h_i = h_{i-1} + F_i(h_{i-1})
// with F_i = outer_i(tanh(inner_i(h))). The final representation h_depth feeds
// a linear classification head.
//
// Parameters live in one contiguous layer list:
//   [input_proj, inner_0, outer_0, ..., inner_{D-1}, outer_{D-1}, head]
class TeacherModel {
 public:
  TeacherModel() = default;
  static TeacherModel create(const TeacherShape& shape, Rng& rng);
  static TeacherModel from_layers(std::vector<DenseLayer> layers);

  std::size_t input_dim() const { return layers_.front().in_dim(); }
  std::size_t width() const { return layers_.front().out_dim(); }
  std::size_t depth() const { return (layers_.size() - 2) / 2; }
  std::size_t classes() const { return layers_.back().out_dim(); }

  DenseLayer& input_proj() { return layers_.front(); }
  const DenseLayer& input_proj() const { return layers_.front(); }
  DenseLayer& block_inner(std::size_t i) { return layers_[1 + 2 * i]; }
  const DenseLayer& block_inner(std::size_t i) const { return layers_[1 + 2 * i]; }
  DenseLayer& block_outer(std::size_t i) { return layers_[2 + 2 * i]; }
  const DenseLayer& block_outer(std::size_t i) const { return layers_[2 + 2 * i]; }
  DenseLayer& head() { return layers_.back(); }
  const DenseLayer& head() const { return layers_.back(); }

  std::span<DenseLayer> layers() { return layers_; }
  std::span<const DenseLayer> layers() const { return layers_; }

  friend bool operator==(const TeacherModel&, const TeacherModel&) = default;

 private:
  explicit TeacherModel(std::vector<DenseLayer> layers);
  std::vector<DenseLayer> layers_;
};

struct TeacherOutput {
  Vector final_rep;
  Vector logits;
};

struct TeacherTrace {
  LayerTrace input;
  std::vector<LayerTrace> inner;
  std::vector<LayerTrace> outer;
  std::vector<Vector> block_acts;  // h_0 .. h_depth
  LayerTrace head;
  bool valid = false;
};

TeacherOutput teacher_forward(const TeacherModel& model, std::span<const double> x);
TeacherOutput teacher_forward(const TeacherModel& model, std::span<const double> x,
                              TeacherTrace& trace);

// Gradients from upstream dL/dlogits and, optionally, dL/dfinal_rep.
Gradients teacher_backward(const TeacherModel& model, const TeacherTrace& trace,
                           std::span<const double> d_logits,
                           std::span<const double> d_final_rep = {});

// Shallow tanh network: input_proj then N same-width layers. The
// representation after layer ceil(N/2) is tapped as the mid representation.
//
// Parameters: [input_proj, layer_1, ..., layer_N]
class StudentModel {
 public:
  StudentModel() = default;
  static StudentModel create(std::size_t input_dim, std::size_t width, std::size_t depth,
                             Rng& rng);
  static StudentModel from_layers(std::vector<DenseLayer> layers);

  std::size_t input_dim() const { return layers_.front().in_dim(); }
  std::size_t width() const { return layers_.front().out_dim(); }
  std::size_t depth() const { return layers_.size() - 1; }
  std::size_t mid_index() const { return (depth() + 1) / 2; }

  std::span<DenseLayer> layers() { return layers_; }
  std::span<const DenseLayer> layers() const { return layers_; }

  friend bool operator==(const StudentModel&, const StudentModel&) = default;

 private:
  explicit StudentModel(std::vector<DenseLayer> layers);
  std::vector<DenseLayer> layers_;
};

struct StudentOutput {
  Vector final_rep;
  Vector mid_rep;
};

struct StudentTrace {
  std::vector<LayerTrace> layers;  // input_proj, layer_1..layer_N
  bool valid = false;
};

StudentOutput student_forward(const StudentModel& model, std::span<const double> x);
StudentOutput student_forward(const StudentModel& model, std::span<const double> x,
                              StudentTrace& trace);

// Either upstream span may be empty, meaning zero gradient at that output.
Gradients student_backward(const StudentModel& model, const StudentTrace& trace,
                           std::span<const double> d_final,
                           std::span<const double> d_mid = {});

}  // namespace studentpar::nn
