#pragma once

#include <span>

#include "studentpar/nn/dense.hpp"
#include "studentpar/nn/models.hpp"

namespace studentpar::distill {

using nn::Vector;

// 1/2 ||t_rep - prev_ensemble - s_final||^2
double boost_loss(std::span<const double> t_rep, std::span<const double> prev_ensemble,
                  std::span<const double> s_final);

// 1/2 ||prev_ensemble - s_mid||^2
double stack_loss(std::span<const double> prev_ensemble, std::span<const double> s_mid);

// boost_loss + lambda * stack_loss
double combined_loss(std::span<const double> t_rep, std::span<const double> prev_ensemble,
                     std::span<const double> s_final, std::span<const double> s_mid, double lambda);

// Combined distillation loss of one sample for a training student; teacher
// and previous ensemble are constants. With `with_stack` false the stacking
// term is dropped. Writes dL/dparams into `grads` when non-null.
double student_sample_loss(const nn::StudentModel& student, std::span<const double> x,
                           std::span<const double> t_rep, std::span<const double> prev_ensemble,
                           double lambda, bool with_stack, nn::Gradients* grads);

Vector softmax(std::span<const double> logits, double temperature = 1.0);
Vector log_softmax(std::span<const double> logits, double temperature = 1.0);

// -sum_c softmax(teacher/T)_c * log softmax(student/T)_c
double soft_cross_entropy(std::span<const double> student_logits,
                          std::span<const double> teacher_logits, double temperature);

// d soft_cross_entropy / d student_logits = (softmax(s/T) - softmax(t/T)) / T
Vector soft_cross_entropy_grad(std::span<const double> student_logits,
                               std::span<const double> teacher_logits, double temperature);

// -log softmax(logits)_label, with dL/dlogits written to `d_logits` if non-null.
double hard_cross_entropy(std::span<const double> logits, int label, Vector* d_logits);

// Index of the largest entry (first on ties).
std::size_t argmax(std::span<const double> values);

}  // namespace studentpar::distill
