#pragma once

#include <span>

#include "studentpar/kernels/parallel.hpp"
#include "studentpar/nn/models.hpp"

namespace studentpar::kernels {

using nn::Matrix;

// Row i of every output matrix belongs to row i of `inputs`.
struct TeacherBatch {
  Matrix reps;
  Matrix logits;
};

struct StudentBatch {
  Matrix final_rep;
  Matrix mid_rep;
};

TeacherBatch teacher_outputs(const nn::TeacherModel& teacher, const Matrix& inputs,
                             Exec exec = Exec::Parallel);

StudentBatch student_outputs(const nn::StudentModel& student, const Matrix& inputs,
                             Exec exec = Exec::Parallel);

// Applies one dense layer to every row.
Matrix dense_rows(const nn::DenseLayer& layer, const Matrix& inputs, Exec exec = Exec::Parallel);

// out += alpha * in, row-wise over equal-shaped matrices.
void axpy_rows(double alpha, const Matrix& in, Matrix& out, Exec exec = Exec::Parallel);

// Per-row Euclidean norm of (a - b).
std::vector<double> row_distance(const Matrix& a, const Matrix& b, Exec exec = Exec::Parallel);

}  // namespace studentpar::kernels
