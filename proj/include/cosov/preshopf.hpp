#pragma once

#include <optional>

#include "cosov/presentation.hpp"

namespace cosov {

/// Group-like candidate with a designated inverse, both free-algebra
/// representatives of classes in the presented quotient.
struct GroupLikeElement {
    NCPoly element;
    NCPoly inverse;
};

/// Hopf structure on a presented algebra: coproduct, counit and antipode
/// given on generators and extended (anti-)multiplicatively. All axioms are
/// verified modulo the degree-truncated relation ideal.
struct PresentedHopf {
    PresentationPtr pres;
    std::vector<TensorPoly> comult;            // per generator
    std::vector<Scalar> counit;                // per generator
    std::vector<NCPoly> antipode;              // per generator
    std::optional<std::vector<NCPoly>> antipode_inv;
    std::optional<GroupLikeElement> sovereign; // builtin-designated candidate
    std::vector<std::string> notes;            // provenance of derived formulas

    const GenSetPtr& gens() const { return pres->gens(); }
    const FieldDesc& field() const { return pres->field(); }
};

/// Multiplicative/linear extensions of the structure maps to free-algebra
/// elements (representatives; reduction happens only inside membership).
TensorPoly extend_comult(const PresentedHopf& h, const NCPoly& p);
Scalar extend_counit(const PresentedHopf& h, const NCPoly& p);
NCPoly extend_antipode(const PresentedHopf& h, const NCPoly& p);
NCPoly extend_antipode_inv(const PresentedHopf& h, const NCPoly& p);

/// p == q modulo the truncated relation ideal at degree bound d.
CheckResult check_ideal_equal(std::string name, const NCPoly& p, const NCPoly& q,
                              const Presentation& pres, int d);
CheckResult check_tensor_ideal_zero(std::string name, const TensorPoly& t,
                                    const Presentation& pres, int d);

CheckResult check_comult_well_defined(const PresentedHopf& h, int d);
CheckResult check_counit_well_defined(const PresentedHopf& h);
CheckResult check_antipode_well_defined(const PresentedHopf& h, int d);
CheckResult check_antipode_axiom(const PresentedHopf& h, int d);
/// Requires antipode_inv; throws errc::missing_inverse otherwise.
CheckResult check_antipode_inverse(const PresentedHopf& h, int d);

CheckResult check_group_like(const PresentedHopf& h, const GroupLikeElement& g, int d);
/// S^{-1}(x) == g S(x) g^{-1} mod ideal for every generator x.
CheckResult check_sovereign_element(const PresentedHopf& h, const GroupLikeElement& g, int d);

/// Full verification suite (well-definedness, axioms, inverse when present,
/// designated sovereign element when present).
Report verify_presented_hopf(const PresentedHopf& h, int d);

/// The Hopf algebra k{X_1..X_n, Phi, PhiInv} / (Phi PhiInv = 1 = PhiInv Phi)
/// with group-like Phi and primitive-type generators X_i twisted by Phi.
PresentedHopf builtin_Hn(size_t n);

/// Sweedler's H4 as a two-generator presentation (g, x).
PresentedHopf builtin_sweedler_presented();

/// Laurent polynomials k[t, t^{-1}] with group-like t.
PresentedHopf builtin_laurent();

} // namespace cosov
