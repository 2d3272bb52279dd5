#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cosov/matrix.hpp"
#include "cosov/verdict.hpp"

namespace cosov {

/// Finite-dimensional bialgebra/Hopf algebra given by structure constants on
/// an ordered basis e_0..e_{n-1}.
///   mult[(i*n+j)*n+k]   = coefficient of e_k in e_i * e_j
///   comult[(i*n+j)*n+k] = coefficient of e_j (x) e_k in Delta(e_i)
///   antipode.at(j, i)   = coefficient of e_j in S(e_i)
struct FinHopf {
    size_t dim = 0;
    FieldDesc field = FieldDesc::rationals();
    std::vector<Scalar> mult;
    std::vector<Scalar> unit;
    std::vector<Scalar> comult;
    std::vector<Scalar> counit;
    Matrix antipode;
    std::optional<Matrix> antipode_inv;
    std::vector<std::string> basis_names;

    const Scalar& m(size_t i, size_t j, size_t k) const { return mult[(i * dim + j) * dim + k]; }
    const Scalar& d(size_t i, size_t j, size_t k) const { return comult[(i * dim + j) * dim + k]; }
    Scalar& m(size_t i, size_t j, size_t k) { return mult[(i * dim + j) * dim + k]; }
    Scalar& d(size_t i, size_t j, size_t k) { return comult[(i * dim + j) * dim + k]; }

    std::string basis_name(size_t i) const;
};

/// Throws errc::dimension_mismatch when tensor shapes are inconsistent.
void check_shapes(const FinHopf& a);

/// Product of two coefficient vectors in the algebra.
std::vector<Scalar> fd_mul(const FinHopf& a, const std::vector<Scalar>& x,
                           const std::vector<Scalar>& y);

Report verify_algebra(const FinHopf& a);
Report verify_coalgebra(const FinHopf& a);
Report verify_bialgebra(const FinHopf& a);
Report verify_antipode(const FinHopf& a);
/// All of the above, plus the antipode-inverse consistency when present.
Report verify_fin_hopf(const FinHopf& a);

bool is_involutory(const FinHopf& a);

/// Transposes all structure tensors; the dual Hopf algebra on the dual basis.
FinHopf dual_hopf(const FinHopf& a);

/// Sweedler's 4-dimensional Hopf algebra on the basis (1, g, x, gx).
FinHopf builtin_sweedler();

/// Group algebra from a multiplication table table[i][j] = index of g_i g_j.
/// Identity must be element 0. Throws errc::not_a_group on a broken table.
FinHopf builtin_group_algebra(const std::vector<std::vector<size_t>>& table);

/// Cyclic group Z/m convenience wrapper.
FinHopf builtin_cyclic_group_algebra(size_t m);

} // namespace cosov
