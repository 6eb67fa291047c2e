#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "studentpar/nn/models.hpp"

namespace studentpar::distill {

using nn::Matrix;
using nn::Vector;

// Ordered boosting ensemble plus the classifier shared by every prefix.
// multipliers[0] is always exactly 1.
struct EnsembleState {
  std::vector<nn::StudentModel> students;
  std::vector<double> multipliers;
  nn::DenseLayer classifier;

  std::size_t size() const { return students.size(); }
};

// sum_{m < k} alpha_m * S_m(x)
Vector ensemble_rep(const EnsembleState& state, std::span<const double> x, std::size_t k);

// Sufficient statistics of the quadratic 1/2 sum ||t - prev - alpha s||^2.
struct ResidualProjection {
  double inner = 0.0;         // sum_x <t - prev, s>
  double student_norm = 0.0;  // sum_x ||s||^2
};

// Rows are samples; all three matrices share one shape.
ResidualProjection residual_projection(const Matrix& t_reps, const Matrix& prev_reps,
                                       const Matrix& s_reps);

// Closed-form minimizer inner / student_norm, unclamped. Throws NumericError
// when every student representation is zero.
double line_search_alpha(const Matrix& t_reps, const Matrix& prev_reps, const Matrix& s_reps);

// AnyBoost step -<grad L_boost, S> / (L |S|^2). The gradient of the boost
// loss at the ensemble output is -(T - B), so lipschitz == 1 reproduces the
// line search bit for bit.
double anyboost_step(const Matrix& t_reps, const Matrix& prev_reps, const Matrix& s_reps,
                     double lipschitz);

// Halting predicate of the boosting loop: the new member does not correlate
// with the negative loss gradient.
inline bool halting_predicate(double inner_product) { return inner_product <= 0.0; }

// Top ceil(a% n) samples by residual norm (descending, ties to the lower
// index), followed by ceil(b% n) drawn uniformly without replacement from
// the remaining samples. Deterministic in `seed`.
std::vector<std::size_t> residual_subsample(std::span<const double> residual_norms,
                                            double top_pct, double rand_pct, std::uint64_t seed);

// ceil(pct% * n), clamped to n.
std::size_t percent_count(double pct, std::size_t n);

}  // namespace studentpar::distill
