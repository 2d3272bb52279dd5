#pragma once

#include "cosov/universal.hpp"

namespace cosov {

/// Dense multilinear form E : V^{(x)N} -> k, index-major storage
/// (the last index varies fastest).
struct ETensor {
    size_t n = 0;
    size_t N = 2;
    FieldDesc field = FieldDesc::rationals();
    std::vector<Scalar> values; // n^N entries

    size_t flat(const std::vector<size_t>& idx) const;
    const Scalar& at(const std::vector<size_t>& idx) const { return values[flat(idx)]; }
    Scalar& at(const std::vector<size_t>& idx) { return values[flat(idx)]; }
};

struct Nondegeneracy {
    bool left = false;
    bool right = false;
};

/// left: the n^{N-1} x n matrix E(j_1..j_{N-1}, k) has rank n;
/// right: likewise with the leading index.
Nondegeneracy check_nondegenerate(const ETensor& e);

/// lambda(i, j_1..j_{N-1}) with sum_J lambda(i,J) E(J,k) = delta_ik; stored
/// with index i * n^{N-1} + flat(J). Throws errc::inconsistent when left
/// nondegeneracy fails.
std::vector<Scalar> solve_star(const ETensor& e);
/// mu(j_1..j_{N-1}, i) with sum_J E(k,J) mu(J,i) = delta_ik; stored with
/// index flat(J) * n + i. Throws errc::inconsistent.
std::vector<Scalar> solve_starstar(const ETensor& e);

struct SLEAlgebra {
    ETensor E;
    std::vector<Scalar> lambda; // (*) solution
    std::vector<Scalar> mu;     // (**) solution
    PresentedHopf hopf;         // generators a_ij
    MatrixCorep corep_a;
    std::optional<std::vector<Scalar>> beta;
    std::optional<GenCharacter> phi_beta;
};

/// Relations E(j)a_{j1 i1}..a_{jN iN} = E(i) (both row and column families),
/// matrix coalgebra, antipode of degree N-1 from the lambda formula and its
/// inverse from the mu formula. Throws errc::degenerate.
SLEAlgebra build_SLE(const ETensor& e);

/// The proportionality E(J, i) = beta_i E(i, J); empty when inconsistent or
/// when some beta_i is zero or undetermined.
std::optional<std::vector<Scalar>> find_beta(const ETensor& e);

/// Character Phi_beta(a_ij) = delta_ij beta_i: check_character plus
/// verify_sovereign_pres. Throws errc::beta_missing when beta was not found.
CheckResult sovereign_char_beta(const SLEAlgebra& a, int d);

/// The quantum exterior form: zero on repeated indices, (-q)^{inversions}
/// on permutations. Field is Q(q); N = n.
ETensor build_Eq(size_t n);

} // namespace cosov
