#pragma once

#include <cstdint>
#include <vector>

#include "studentpar/common/rng.hpp"
#include "studentpar/nn/matrix.hpp"

namespace studentpar::distill {

using nn::Matrix;

struct Split {
  Matrix inputs;            // one sample per row
  std::vector<int> labels;  // class index per row

  std::size_t size() const { return labels.size(); }
};

struct Dataset {
  Split train;
  Split validation;
  Split test;
  std::size_t classes = 2;
};

// Seeded Gaussian-mixture classification task. Each class owns
// `components_per_class` centers drawn uniformly from [-separation,
// separation]^input_dim; samples are center + overlap * N(0, I).
struct TaskConfig {
  std::size_t input_dim = 8;
  std::size_t classes = 2;
  std::size_t components_per_class = 3;
  double separation = 1.0;
  double overlap = 0.6;
  std::size_t train = 1000;
  std::size_t validation = 400;
  std::size_t test = 1000;
};

Dataset make_gaussian_mixture(const TaskConfig& config, const Rng& rng);

// Validates label ranges and row counts.
void validate(const Dataset& data);

}  // namespace studentpar::distill
