#pragma once

#include "cosov/forms.hpp"

namespace cosov {

/// Matrix corepresentation over a presented Hopf algebra, in the column
/// convention alpha(v_i) = sum_j v_j (x) a_ji.
struct MatrixCorep {
    size_t size = 0;
    std::vector<NCPoly> entries; // row-major, size*size
    std::string label;

    const NCPoly& at(size_t i, size_t j) const { return entries[i * size + j]; }
    NCPoly& at(size_t i, size_t j) { return entries[i * size + j]; }
};

struct DimensionPair {
    Scalar left;
    Scalar right;
};

/// The corep invariant: Delta(a_ij) == sum_k a_ik (x) a_kj mod ideal and
/// eps(a_ij) = delta_ij exactly.
CheckResult check_corep(const PresentedHopf& h, const MatrixCorep& v, int d);

MatrixCorep trivial_corep(const PresentedHopf& h);
MatrixCorep generator_matrix_corep(const PresentedHopf& h, const std::vector<size_t>& gen_indices,
                                   size_t n, std::string label);

/// Dual coaction matrix with (i, j) entry S(a_ji); right dual uses S^{-1}
/// and throws errc::missing_inverse without antipode inverse data.
MatrixCorep left_dual(const PresentedHopf& h, const MatrixCorep& v);
MatrixCorep right_dual(const PresentedHopf& h, const MatrixCorep& v);

/// Kronecker-pattern corep with entries a_ik * b_jl.
MatrixCorep tensor_corep(const PresentedHopf& h, const MatrixCorep& v, const MatrixCorep& w);
/// Block-diagonal corep.
MatrixCorep direct_sum(const PresentedHopf& h, const MatrixCorep& v, const MatrixCorep& w);

/// The matrix (phi(a_ij)). Verifies the intertwiner condition
/// sum_k S^{-1}(a_ik) phi(a_kj) == sum_k phi(a_ik) S(a_kj) mod ideal and
/// throws errc::intertwiner_check_failed on a certified failure.
Matrix sovereign_iso(const PresentedHopf& h, const MatrixCorep& v, const GenCharacter& phi,
                     int d);

/// left = sum phi(a_ii), right = sum phi(S(a_ii)).
DimensionPair dims(const PresentedHopf& h, const MatrixCorep& v, const GenCharacter& phi);

/// Exact dimension bookkeeping: unit dims (1,1); duals swap left/right;
/// tensor products multiply; direct sums add.
CheckResult check_dim_properties(const PresentedHopf& h, const std::vector<MatrixCorep>& examples,
                                 const GenCharacter& phi, int d);

/// Coreps related by a supplied invertible intertwiner share dims.
CheckResult check_intertwined_dims(const PresentedHopf& h, const MatrixCorep& v,
                                   const MatrixCorep& w, const Matrix& t,
                                   const GenCharacter& phi, int d);

// ---- finite-dimensional flavor -------------------------------------------

/// Matrix corep over a FinHopf; entries are coefficient vectors in A.
struct FdMatrixCorep {
    size_t size = 0;
    std::vector<std::vector<Scalar>> entries; // row-major
    std::string label;

    const std::vector<Scalar>& at(size_t i, size_t j) const { return entries[i * size + j]; }
    std::vector<Scalar>& at(size_t i, size_t j) { return entries[i * size + j]; }
};

CheckResult check_corep_fd(const FinHopf& a, const FdMatrixCorep& v);

/// A coacting on itself by its comultiplication.
FdMatrixCorep regular_corep(const FinHopf& a);

FdMatrixCorep left_dual_fd(const FinHopf& a, const FdMatrixCorep& v);
FdMatrixCorep right_dual_fd(const FinHopf& a, const FdMatrixCorep& v);
FdMatrixCorep tensor_corep_fd(const FinHopf& a, const FdMatrixCorep& v, const FdMatrixCorep& w);

DimensionPair dims_fd(const FinHopf& a, const FdMatrixCorep& v, const GenCharacter& phi);

} // namespace cosov
