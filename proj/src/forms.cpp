#include "cosov/forms.hpp"

namespace cosov {

namespace {

void require_values(const GenCharacter& chi, size_t n) {
    if (chi.values.size() != n) fail(errc::missing_value, "character values incomplete");
}

} // namespace

Scalar char_eval(const GenCharacter& chi, const FieldDesc& f, const NCPoly& p) {
    return apply_scalar_map(chi.values, f, p);
}

CheckResult check_character(const PresentedHopf& h, const GenCharacter& chi) {
    require_values(chi, h.gens()->size());
    for (const auto& r : h.pres->relations()) {
        if (!char_eval(chi, h.field(), r).is_zero())
            return CheckResult::fail("character", "relation " + r.to_string() +
                                                      " has nonzero value");
    }
    return CheckResult::pass("character");
}

GenCharacter counit_character(const PresentedHopf& h) { return {h.counit}; }

GenCharacter convolve_characters(const PresentedHopf& h, const GenCharacter& phi,
                                 const GenCharacter& psi) {
    size_t n = h.gens()->size();
    require_values(phi, n);
    require_values(psi, n);
    const FieldDesc& f = h.field();
    GenCharacter out;
    for (size_t i = 0; i < n; ++i) {
        Scalar v = Scalar::zero(f);
        for (const auto& [k, c] : h.comult[i].terms())
            v += c * apply_scalar_map_word(phi.values, f, k.first) *
                 apply_scalar_map_word(psi.values, f, k.second);
        out.values.push_back(v);
    }
    return out;
}

GenCharacter character_inverse(const PresentedHopf& h, const GenCharacter& phi) {
    size_t n = h.gens()->size();
    require_values(phi, n);
    GenCharacter inv;
    for (size_t i = 0; i < n; ++i)
        inv.values.push_back(char_eval(phi, h.field(), h.antipode[i]));
    GenCharacter prod = convolve_characters(h, phi, inv);
    for (size_t i = 0; i < n; ++i) {
        if (!(prod.values[i] == h.counit[i]))
            fail(errc::inverse_check_failed,
                 "phi * (phi o S) differs from the counit on " + h.gens()->name(i));
    }
    return inv;
}

namespace {

// Accumulate over the triple coproduct of generator i: terms
// c * phi(leg1) * psi(leg3) * middle(leg2).
NCPoly sandwich(const PresentedHopf& h, const GenCharacter& phi, const GenCharacter& psi,
                size_t gen_index, bool antipode_middle) {
    size_t n = h.gens()->size();
    require_values(phi, n);
    require_values(psi, n);
    const FieldDesc& f = h.field();
    const auto& gens = h.gens();
    NCPoly out(gens, f);
    for (const auto& [k, c] : h.comult[gen_index].terms()) {
        // (Delta (x) id) Delta: expand the first leg again
        TensorPoly inner = extend_comult(h, NCPoly::monomial(gens, k.first, Scalar::one(f)));
        Scalar right = apply_scalar_map_word(psi.values, f, k.second);
        for (const auto& [ik, ic] : inner.terms()) {
            Scalar coeff = c * ic * apply_scalar_map_word(phi.values, f, ik.first) * right;
            if (coeff.is_zero()) continue;
            NCPoly mid = NCPoly::monomial(gens, ik.second, Scalar::one(f));
            if (antipode_middle) mid = apply_anti_map(h.antipode, mid);
            out += mid.scaled(coeff);
        }
    }
    return out;
}

} // namespace

NCPoly sandwich_antipode(const PresentedHopf& h, const GenCharacter& phi,
                         const GenCharacter& psi, size_t gen_index) {
    return sandwich(h, phi, psi, gen_index, true);
}

NCPoly sandwich_identity(const PresentedHopf& h, const GenCharacter& phi,
                         const GenCharacter& psi, size_t gen_index) {
    return sandwich(h, phi, psi, gen_index, false);
}

CheckResult verify_sovereign_pres(const PresentedHopf& h, const GenCharacter& phi, int d) {
    CheckResult chr = check_character(h, phi);
    if (!chr.ok()) return CheckResult::fail("sovereign_character", chr.detail);
    if (!h.antipode_inv) fail(errc::missing_inverse, "sovereign check needs the antipode inverse");
    GenCharacter inv = character_inverse(h, phi);
    CheckResult out = CheckResult::pass("sovereign_character", "", d);
    for (size_t i = 0; i < h.gens()->size(); ++i) {
        NCPoly lhs = apply_anti_map(*h.antipode_inv, NCPoly::generator(h.gens(), h.field(), i));
        NCPoly rhs = sandwich_antipode(h, phi, inv, i);
        CheckResult c = check_ideal_equal("sovereign_character", lhs, rhs, *h.pres, d);
        if (!c.ok() && out.ok()) out.detail = "generator " + h.gens()->name(i);
        out.status = combine(out.status, c.status);
        out.degree = std::max(out.degree, c.degree);
    }
    return out;
}

CheckResult verify_sovereign_s2_pres(const PresentedHopf& h, const GenCharacter& phi, int d) {
    CheckResult chr = check_character(h, phi);
    if (!chr.ok()) return CheckResult::fail("sovereign_character_s2", chr.detail);
    GenCharacter inv = character_inverse(h, phi);
    CheckResult out = CheckResult::pass("sovereign_character_s2", "", d);
    for (size_t i = 0; i < h.gens()->size(); ++i) {
        NCPoly g = NCPoly::generator(h.gens(), h.field(), i);
        NCPoly lhs = apply_anti_map(h.antipode, apply_anti_map(h.antipode, g));
        NCPoly rhs = sandwich_identity(h, inv, phi, i);
        CheckResult c = check_ideal_equal("sovereign_character_s2", lhs, rhs, *h.pres, d);
        if (!c.ok() && out.ok()) out.detail = "generator " + h.gens()->name(i);
        out.status = combine(out.status, c.status);
        out.degree = std::max(out.degree, c.degree);
    }
    return out;
}

// ---- finite-dimensional case ---------------------------------------------

CheckResult check_character_fd(const FinHopf& a, const GenCharacter& chi) {
    check_shapes(a);
    require_values(chi, a.dim);
    size_t n = a.dim;
    Scalar on_unit = Scalar::zero(a.field);
    for (size_t i = 0; i < n; ++i) on_unit += a.unit[i] * chi.values[i];
    if (!on_unit.is_one()) return CheckResult::fail("character", "value on the unit is not 1");
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Scalar lhs = Scalar::zero(a.field);
            for (size_t k = 0; k < n; ++k) lhs += a.m(i, j, k) * chi.values[k];
            if (!(lhs == chi.values[i] * chi.values[j]))
                return CheckResult::fail("character", "not multiplicative on (" +
                                                          a.basis_name(i) + ", " +
                                                          a.basis_name(j) + ")");
        }
    return CheckResult::pass("character");
}

GenCharacter counit_character_fd(const FinHopf& a) { return {a.counit}; }

GenCharacter convolve_characters_fd(const FinHopf& a, const GenCharacter& phi,
                                    const GenCharacter& psi) {
    require_values(phi, a.dim);
    require_values(psi, a.dim);
    GenCharacter out;
    for (size_t i = 0; i < a.dim; ++i) {
        Scalar v = Scalar::zero(a.field);
        for (size_t x = 0; x < a.dim; ++x)
            for (size_t y = 0; y < a.dim; ++y) v += a.d(i, x, y) * phi.values[x] * psi.values[y];
        out.values.push_back(v);
    }
    return out;
}

GenCharacter character_inverse_fd(const FinHopf& a, const GenCharacter& phi) {
    require_values(phi, a.dim);
    GenCharacter inv;
    for (size_t i = 0; i < a.dim; ++i) {
        Scalar v = Scalar::zero(a.field);
        for (size_t j = 0; j < a.dim; ++j) v += a.antipode.at(j, i) * phi.values[j];
        inv.values.push_back(v);
    }
    GenCharacter prod = convolve_characters_fd(a, phi, inv);
    for (size_t i = 0; i < a.dim; ++i)
        if (!(prod.values[i] == a.counit[i]))
            fail(errc::inverse_check_failed, "phi * (phi o S) differs from the counit");
    return inv;
}

namespace {

Matrix sandwich_fd(const FinHopf& a, const GenCharacter& phi, const GenCharacter& psi,
                   bool antipode_middle) {
    require_values(phi, a.dim);
    require_values(psi, a.dim);
    size_t n = a.dim;
    Matrix out(n, n, a.field);
    for (size_t i = 0; i < n; ++i)
        for (size_t x = 0; x < n; ++x)
            for (size_t b = 0; b < n; ++b) {
                if (a.d(i, x, b).is_zero()) continue;
                for (size_t c = 0; c < n; ++c)
                    for (size_t e = 0; e < n; ++e) {
                        Scalar coeff = a.d(i, x, b) * a.d(x, c, e) * phi.values[c] * psi.values[b];
                        if (coeff.is_zero()) continue;
                        if (antipode_middle)
                            for (size_t r = 0; r < n; ++r)
                                out.at(r, i) += coeff * a.antipode.at(r, e);
                        else
                            out.at(e, i) += coeff;
                    }
            }
    return out;
}

} // namespace

Matrix sandwich_antipode_fd(const FinHopf& a, const GenCharacter& phi, const GenCharacter& psi) {
    return sandwich_fd(a, phi, psi, true);
}

Matrix sandwich_identity_fd(const FinHopf& a, const GenCharacter& phi, const GenCharacter& psi) {
    return sandwich_fd(a, phi, psi, false);
}

CheckResult verify_sovereign_fd(const FinHopf& a, const GenCharacter& phi) {
    CheckResult chr = check_character_fd(a, phi);
    if (!chr.ok()) return CheckResult::fail("sovereign_character", chr.detail);
    if (!a.antipode_inv) fail(errc::missing_inverse, "sovereign check needs the antipode inverse");
    GenCharacter inv = character_inverse_fd(a, phi);
    Matrix m = sandwich_antipode_fd(a, phi, inv);
    if (m == *a.antipode_inv) return CheckResult::pass("sovereign_character");
    return CheckResult::fail("sovereign_character", "phi * S * phi^{-1} differs from S^{-1}");
}

CheckResult verify_sovereign_s2_fd(const FinHopf& a, const GenCharacter& phi) {
    CheckResult chr = check_character_fd(a, phi);
    if (!chr.ok()) return CheckResult::fail("sovereign_character_s2", chr.detail);
    GenCharacter inv = character_inverse_fd(a, phi);
    Matrix m = sandwich_identity_fd(a, inv, phi);
    if (m == a.antipode * a.antipode) return CheckResult::pass("sovereign_character_s2");
    return CheckResult::fail("sovereign_character_s2",
                             "phi^{-1} * id * phi differs from S^2");
}

} // namespace cosov
