#pragma once

#include <vector>

#include "kur/common.hpp"

namespace kur {

// Dense row-major matrix, sized for desk-scale problems.
class Matrix {
  public:
    Matrix() = default;
    Matrix(int rows, int cols, double fill = 0.0)
        : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), fill) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    double& operator()(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
    double operator()(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

  private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> a_;
};

// Solves A x = b by LU with partial pivoting.  Throws NumericError if A is
// singular to working precision.
std::vector<double> lu_solve(Matrix a, std::vector<double> b);

// All eigenvalues of a symmetric matrix, ascending, via cyclic Jacobi
// rotations.  Sweeps run until the off-diagonal norm drops below 1e-12 or
// stops improving (rounding floor).  Throws std::invalid_argument if the
// input is not symmetric.
std::vector<double> jacobi_eigenvalues(Matrix a);

}  // namespace kur
