#pragma once

#include <span>
#include <vector>

#include "studentpar/common/rng.hpp"
#include "studentpar/nn/matrix.hpp"

namespace studentpar::nn {

enum class Activation { Tanh, Identity };

// y = activation(W x + b), W stored out x in.
struct DenseLayer {
  Matrix weight;
  Vector bias;
  Activation activation = Activation::Identity;

  std::size_t in_dim() const { return weight.cols(); }
  std::size_t out_dim() const { return weight.rows(); }

  // Glorot-uniform weights in +-sqrt(6 / (fan_in + fan_out)), zero bias.
  static DenseLayer glorot(std::size_t in, std::size_t out, Activation act, Rng& rng);
  static DenseLayer zeros(std::size_t in, std::size_t out, Activation act);

  friend bool operator==(const DenseLayer&, const DenseLayer&) = default;
};

// Values cached by a forward pass and consumed by the matching backward pass.
struct LayerTrace {
  Vector input;
  Vector output;  // post-activation
};

struct LayerGrad {
  Matrix weight;
  Vector bias;

  LayerGrad() = default;
  explicit LayerGrad(const DenseLayer& like)
      : weight(like.weight.rows(), like.weight.cols()), bias(like.bias.size(), 0.0) {}

  LayerGrad& operator+=(const LayerGrad& other);
  LayerGrad& operator*=(double scale);
};

Vector dense_forward(const DenseLayer& layer, std::span<const double> x);
Vector dense_forward(const DenseLayer& layer, std::span<const double> x, LayerTrace& trace);

// Accumulates dL/dW and dL/db into `grad` given dL/dy, returns dL/dx.
Vector dense_backward(const DenseLayer& layer, const LayerTrace& trace,
                      std::span<const double> d_output, LayerGrad& grad);

// Gradients for an ordered list of layers, congruent with a model's parameter
// layout. Supports accumulation across losses and samples.
class Gradients {
 public:
  Gradients() = default;
  explicit Gradients(std::span<const DenseLayer> layers);

  std::size_t size() const { return layers_.size(); }
  LayerGrad& operator[](std::size_t i) { return layers_[i]; }
  const LayerGrad& operator[](std::size_t i) const { return layers_[i]; }

  bool congruent_with(std::span<const DenseLayer> layers) const;
  bool all_finite() const;
  bool all_zero() const;
  void set_zero();

  Gradients& operator+=(const Gradients& other);
  Gradients& operator*=(double scale);

 private:
  std::vector<LayerGrad> layers_;
};

}  // namespace studentpar::nn
