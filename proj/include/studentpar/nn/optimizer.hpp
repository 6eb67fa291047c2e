#pragma once

#include <span>
#include <vector>

#include "studentpar/nn/dense.hpp"

namespace studentpar::nn {

struct AdamOptions {
  double learning_rate = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
};

// SGD or Adam over a fixed list of layers. Moment state is created lazily on
// the first step and must stay congruent with the layers afterwards.
class Optimizer {
 public:
  enum class Kind { Sgd, Adam };

  static Optimizer sgd(double learning_rate);
  static Optimizer adam(const AdamOptions& options = {});

  Kind kind() const { return kind_; }
  double learning_rate() const { return options_.learning_rate; }
  std::size_t steps_taken() const { return steps_; }

  // Applies `grads` to `params`, then zeroes `grads`. Non-finite gradients
  // leave both the parameters and the moment state untouched and throw.
  void step(std::span<DenseLayer> params, Gradients& grads);

 private:
  Optimizer(Kind kind, AdamOptions options) : kind_(kind), options_(options) {}

  Kind kind_;
  AdamOptions options_;
  std::size_t steps_ = 0;
  Gradients first_moment_;
  Gradients second_moment_;
};

}  // namespace studentpar::nn
