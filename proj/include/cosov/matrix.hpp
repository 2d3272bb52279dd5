#pragma once

#include <vector>

#include "cosov/scalar.hpp"

namespace cosov {

/// Dense matrix of exact scalars, row-major. All entries share one field.
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(size_t rows, size_t cols, const FieldDesc& f)
        : rows_(rows), cols_(cols), field_(f), entries_(rows * cols, Scalar::zero(f)) {}

    static Matrix identity(size_t n, const FieldDesc& f);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    const FieldDesc& field() const { return field_; }

    Scalar& at(size_t i, size_t j) { return entries_[i * cols_ + j]; }
    const Scalar& at(size_t i, size_t j) const { return entries_[i * cols_ + j]; }

    bool operator==(const Matrix&) const = default;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);

    Matrix transpose() const;
    Scalar trace() const;
    /// Gauss-Jordan inverse; throws errc::singular if not invertible.
    Matrix inverse() const;
    bool is_square() const { return rows_ == cols_; }
    bool is_identity() const;
    bool is_zero() const;

  private:
    size_t rows_, cols_;
    FieldDesc field_ = FieldDesc::rationals();
    std::vector<Scalar> entries_;
};

/// Affine solution set of A x = b: one particular solution plus a basis of
/// the homogeneous kernel. Columns vectors are n x 1 matrices.
struct SolutionSpace {
    Matrix particular;
    std::vector<Matrix> kernel;
};

/// Exact Gaussian elimination with deterministic leftmost pivoting.
/// Throws errc::inconsistent when the system has no solution.
SolutionSpace solve_linear(const Matrix& a, const Matrix& b);

} // namespace cosov
