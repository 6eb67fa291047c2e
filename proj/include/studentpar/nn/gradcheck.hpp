#pragma once

#include <functional>
#include <span>
#include <string>

#include "studentpar/nn/dense.hpp"

namespace studentpar::nn {

struct GradCheckReport {
  double max_rel_error = 0.0;
  std::size_t parameters_checked = 0;
  std::string worst_parameter;  // "layer L weight[r,c]" or "layer L bias[i]"
  bool passed = false;
};

// Evaluates the loss at the current parameter values. When `grads` is
// non-null it must also write the analytic gradient (congruent with the
// parameter list) into it.
using LossWithGradient = std::function<double(Gradients* grads)>;

// Relative error used by the checker: |a - n| / max(|a|, |n|, floor).
double gradient_relative_error(double analytic, double numeric, double floor = 1e-6);

// Compares analytic gradients against central differences (f(p+h)-f(p-h))/2h
// over every parameter in `params`. Parameters are restored afterwards.
GradCheckReport finite_diff_check(std::span<DenseLayer> params, const LossWithGradient& loss,
                                  double step, double tol);

// Same comparison against caller-supplied analytic gradients.
GradCheckReport finite_diff_check(std::span<DenseLayer> params, const Gradients& analytic,
                                  const LossWithGradient& loss, double step, double tol);

}  // namespace studentpar::nn
