#pragma once

#include "cosov/corep.hpp"

namespace cosov {

/// The universal Hopf algebra H(F) attached to an invertible matrix F:
/// generators u_ij, v_ij with the matrix relations
///   u tv = tv u = 1,   v F tu F^{-1} = F tu F^{-1} v = 1,
/// matrix coalgebra structure on u and v, S(u) = tv, S(v) = F tu F^{-1},
/// and the sovereign character phi with phi(u) = tF, phi(v) = F^{-1}.
struct HFAlgebra {
    Matrix F;
    size_t n = 0;
    PresentedHopf hopf;
    GenCharacter phi;
    MatrixCorep corep_u;
    MatrixCorep corep_v;
};

/// Build H(F); throws errc::singular if F is not invertible. The structure
/// is stored, not verified — run verify_HF for the full suite.
HFAlgebra build_HF(const Matrix& F);

/// True iff Tr(F) = 0 or Tr(F^{-1}) = 0 (the non-cosemisimplicity flag).
bool hf_trace_flag(const HFAlgebra& h);

/// Full Hopf suite + sovereign character + corep invariants for u and v +
/// the exact dimension identity dims(u) = (Tr F, Tr F^{-1}).
Report verify_HF(const HFAlgebra& h, int d);

/// Certifies the homomorphism pair between H(F) and H(K F K^{-1}) given by
/// phi(u) = tK u tK^{-1}, phi(v) = K^{-1} v K, in both directions.
CheckResult iso_conjugate(const HFAlgebra& h, const Matrix& k, int d);

/// Certifies psi : H(F) -> H(tF^{-1}), psi(u) = v, psi(v) = F u F^{-1}.
CheckResult iso_transpose_inverse(const HFAlgebra& h, int d);

/// Literal equality of the two relation sets (scalar invariance H(lF)=H(F)).
bool same_HF_relations(const HFAlgebra& a, const HFAlgebra& b);

/// Solve tS(a) F = F tS^{-1}(a) coefficient-wise in the free algebra for an
/// invertible F, scanning small integer combinations of the kernel basis.
/// Throws errc::no_solution / errc::no_invertible_solution.
Matrix find_F(const PresentedHopf& h, const MatrixCorep& v);

/// Certifies the universality morphism pi : H(F) -> A on a corep a of A,
/// pi(u_ij) = a_ij, pi(v_ij) = S(a_ji): every H(F) relation must land in
/// A's relation ideal at degree bound d.
CheckResult certify_universality(const PresentedHopf& a, const MatrixCorep& v, const Matrix& f,
                                 int d);

} // namespace cosov
