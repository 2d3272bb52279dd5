#pragma once

#include "cosov/finhopf.hpp"
#include "cosov/preshopf.hpp"

namespace cosov {

/// A character given by its values: per generator (presented case) or per
/// basis element (finite-dimensional case).
struct GenCharacter {
    std::vector<Scalar> values;
};

// ---- presented algebras -------------------------------------------------

/// Multiplicative evaluation of generator values on a free-algebra element.
Scalar char_eval(const GenCharacter& chi, const FieldDesc& f, const NCPoly& p);

/// Pass iff the multiplicative extension kills every relation (exact).
CheckResult check_character(const PresentedHopf& h, const GenCharacter& chi);

GenCharacter counit_character(const PresentedHopf& h);

/// (phi * psi)(g) = sum phi(g_1) psi(g_2) from the coproduct of g.
GenCharacter convolve_characters(const PresentedHopf& h, const GenCharacter& phi,
                                 const GenCharacter& psi);

/// phi o S; throws errc::inverse_check_failed unless phi * (phi o S) = eps
/// on every generator.
GenCharacter character_inverse(const PresentedHopf& h, const GenCharacter& phi);

/// The algebra-valued convolution x -> sum phi(x_1) S(x_2) psi(x_3) on one
/// generator, as a free-algebra representative.
NCPoly sandwich_antipode(const PresentedHopf& h, const GenCharacter& phi,
                         const GenCharacter& psi, size_t gen_index);
/// x -> sum phi(x_1) x_2 psi(x_3).
NCPoly sandwich_identity(const PresentedHopf& h, const GenCharacter& phi,
                         const GenCharacter& psi, size_t gen_index);

/// S^{-1}(g) == sum phi(g_1) S(g_2) phi^{-1}(g_3) mod ideal per generator.
CheckResult verify_sovereign_pres(const PresentedHopf& h, const GenCharacter& phi, int d);

/// Equivalent formulation through the antipode square:
/// S^2(g) == sum phi^{-1}(g_1) g_2 phi(g_3) mod ideal per generator.
CheckResult verify_sovereign_s2_pres(const PresentedHopf& h, const GenCharacter& phi, int d);

// ---- finite-dimensional algebras ----------------------------------------

CheckResult check_character_fd(const FinHopf& a, const GenCharacter& chi);

GenCharacter counit_character_fd(const FinHopf& a);

GenCharacter convolve_characters_fd(const FinHopf& a, const GenCharacter& phi,
                                    const GenCharacter& psi);

GenCharacter character_inverse_fd(const FinHopf& a, const GenCharacter& phi);

/// Matrix of x -> sum phi(x_1) S(x_2) psi(x_3).
Matrix sandwich_antipode_fd(const FinHopf& a, const GenCharacter& phi, const GenCharacter& psi);
/// Matrix of x -> sum phi(x_1) x_2 psi(x_3).
Matrix sandwich_identity_fd(const FinHopf& a, const GenCharacter& phi, const GenCharacter& psi);

/// Exact comparison of phi * S * phi^{-1} with the stored antipode inverse.
CheckResult verify_sovereign_fd(const FinHopf& a, const GenCharacter& phi);

/// Exact comparison of S^2 with phi^{-1} * id * phi.
CheckResult verify_sovereign_s2_fd(const FinHopf& a, const GenCharacter& phi);

} // namespace cosov
