#include "cosov/matrix.hpp"

namespace cosov {

Matrix Matrix::identity(size_t n, const FieldDesc& f) {
    Matrix m(n, n, f);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) fail(errc::dimension_mismatch, "matrix product shape mismatch");
    Matrix c(a.rows(), b.cols(), a.field());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t k = 0; k < a.cols(); ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (size_t j = 0; j < b.cols(); ++j)
                c.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        fail(errc::dimension_mismatch, "matrix sum shape mismatch");
    Matrix c(a.rows(), a.cols(), a.field());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j) + b.at(i, j);
    return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        fail(errc::dimension_mismatch, "matrix difference shape mismatch");
    Matrix c(a.rows(), a.cols(), a.field());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j) - b.at(i, j);
    return c;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_, field_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Scalar Matrix::trace() const {
    if (!is_square()) fail(errc::dimension_mismatch, "trace of non-square matrix");
    Scalar s = Scalar::zero(field_);
    for (size_t i = 0; i < rows_; ++i) s += at(i, i);
    return s;
}

bool Matrix::is_identity() const {
    if (!is_square()) return false;
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) {
            if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
        }
    return true;
}

bool Matrix::is_zero() const {
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero()) return false;
    return true;
}

Matrix Matrix::inverse() const {
    if (!is_square()) fail(errc::dimension_mismatch, "inverse of non-square matrix");
    size_t n = rows_;
    Matrix work = *this;
    Matrix inv = identity(n, field_);
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && work.at(pivot, col).is_zero()) ++pivot;
        if (pivot == n) fail(errc::singular, "matrix is singular");
        if (pivot != col) {
            for (size_t j = 0; j < n; ++j) {
                std::swap(work.at(pivot, j), work.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        }
        Scalar p = work.at(col, col);
        for (size_t j = 0; j < n; ++j) {
            work.at(col, j) /= p;
            inv.at(col, j) /= p;
        }
        for (size_t i = 0; i < n; ++i) {
            if (i == col || work.at(i, col).is_zero()) continue;
            Scalar f = work.at(i, col);
            for (size_t j = 0; j < n; ++j) {
                work.at(i, j) -= f * work.at(col, j);
                inv.at(i, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

SolutionSpace solve_linear(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) fail(errc::dimension_mismatch, "incompatible system shapes");
    if (b.cols() != 1) fail(errc::dimension_mismatch, "right-hand side must be a column vector");
    const size_t m = a.rows(), n = a.cols();
    const FieldDesc& f = a.field();
    // augmented [A | b], reduced row echelon with leftmost pivots
    Matrix aug(m, n + 1, f);
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, n) = b.at(i, 0);
    }
    std::vector<size_t> pivot_col;
    size_t row = 0;
    for (size_t col = 0; col < n && row < m; ++col) {
        size_t pr = row;
        while (pr < m && aug.at(pr, col).is_zero()) ++pr;
        if (pr == m) continue;
        if (pr != row)
            for (size_t j = 0; j <= n; ++j) std::swap(aug.at(pr, j), aug.at(row, j));
        Scalar p = aug.at(row, col);
        for (size_t j = col; j <= n; ++j) aug.at(row, j) /= p;
        for (size_t i = 0; i < m; ++i) {
            if (i == row || aug.at(i, col).is_zero()) continue;
            Scalar fac = aug.at(i, col);
            for (size_t j = col; j <= n; ++j) aug.at(i, j) -= fac * aug.at(row, j);
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (size_t i = row; i < m; ++i)
        if (!aug.at(i, n).is_zero()) fail(errc::inconsistent, "linear system has no solution");

    SolutionSpace sol;
    sol.particular = Matrix(n, 1, f);
    for (size_t r = 0; r < pivot_col.size(); ++r) sol.particular.at(pivot_col[r], 0) = aug.at(r, n);
    std::vector<bool> is_pivot(n, false);
    for (size_t c : pivot_col) is_pivot[c] = true;
    for (size_t freec = 0; freec < n; ++freec) {
        if (is_pivot[freec]) continue;
        Matrix k(n, 1, f);
        k.at(freec, 0) = Scalar::one(f);
        for (size_t r = 0; r < pivot_col.size(); ++r)
            k.at(pivot_col[r], 0) = -aug.at(r, freec);
        sol.kernel.push_back(std::move(k));
    }
    return sol;
}

} // namespace cosov
