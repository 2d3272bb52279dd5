#include "cosov/preshopf.hpp"

namespace cosov {

namespace {

CheckStatus status_of(Membership m) {
    switch (m) {
        case Membership::member: return CheckStatus::pass;
        case Membership::not_member: return CheckStatus::fail;
        default: return CheckStatus::inconclusive;
    }
}

// Membership with the effective bound raised to the candidate's degree; a
// larger bound only enlarges the span, so soundness is preserved.
MembershipResult member_at(const NCPoly& p, const Presentation& pres, int d) {
    int eff = std::max(d, static_cast<int>(p.degree()));
    return ideal_membership(p, pres, eff);
}

MembershipResult tensor_member_at(const TensorPoly& t, const Presentation& pres, int d) {
    int eff = d;
    for (const auto& [k, s] : t.terms())
        eff = std::max({eff, static_cast<int>(k.first.size()), static_cast<int>(k.second.size())});
    return tensor_ideal_membership(t, pres, eff);
}

void require_complete(const PresentedHopf& h) {
    size_t n = h.gens()->size();
    if (h.comult.size() != n || h.counit.size() != n || h.antipode.size() != n)
        fail(errc::missing_image, "structure maps must cover every generator");
    if (h.antipode_inv && h.antipode_inv->size() != n)
        fail(errc::missing_image, "antipode inverse must cover every generator");
}

} // namespace

TensorPoly extend_comult(const PresentedHopf& h, const NCPoly& p) {
    require_complete(h);
    return apply_tensor_map(h.comult, h.gens(), h.field(), p);
}

Scalar extend_counit(const PresentedHopf& h, const NCPoly& p) {
    require_complete(h);
    return apply_scalar_map(h.counit, h.field(), p);
}

NCPoly extend_antipode(const PresentedHopf& h, const NCPoly& p) {
    require_complete(h);
    return apply_anti_map(h.antipode, p);
}

NCPoly extend_antipode_inv(const PresentedHopf& h, const NCPoly& p) {
    require_complete(h);
    if (!h.antipode_inv) fail(errc::missing_inverse, "no antipode inverse data");
    return apply_anti_map(*h.antipode_inv, p);
}

CheckResult check_ideal_equal(std::string name, const NCPoly& p, const NCPoly& q,
                              const Presentation& pres, int d) {
    MembershipResult r = member_at(p - q, pres, d);
    CheckResult c{std::move(name), status_of(r.status), "", r.degree};
    if (!c.ok()) c.detail = "difference " + (p - q).to_string();
    return c;
}

CheckResult check_tensor_ideal_zero(std::string name, const TensorPoly& t,
                                    const Presentation& pres, int d) {
    MembershipResult r = tensor_member_at(t, pres, d);
    return {std::move(name), status_of(r.status), "", r.degree};
}

CheckResult check_comult_well_defined(const PresentedHopf& h, int d) {
    require_complete(h);
    CheckResult out = CheckResult::pass("comult.well_defined", "", d);
    for (const auto& r : h.pres->relations()) {
        MembershipResult m = tensor_member_at(extend_comult(h, r), *h.pres, d);
        CheckStatus s = status_of(m.status);
        if (s != CheckStatus::pass && out.ok()) out.detail = "relation " + r.to_string();
        out.status = combine(out.status, s);
        out.degree = std::max(out.degree, m.degree);
    }
    return out;
}

CheckResult check_counit_well_defined(const PresentedHopf& h) {
    require_complete(h);
    for (const auto& r : h.pres->relations()) {
        if (!extend_counit(h, r).is_zero())
            return CheckResult::fail("counit.well_defined", "relation " + r.to_string());
    }
    return CheckResult::pass("counit.well_defined");
}

CheckResult check_antipode_well_defined(const PresentedHopf& h, int d) {
    require_complete(h);
    CheckResult out = CheckResult::pass("antipode.well_defined", "", d);
    for (const auto& r : h.pres->relations()) {
        MembershipResult m = member_at(extend_antipode(h, r), *h.pres, d);
        CheckStatus s = status_of(m.status);
        if (s != CheckStatus::pass && out.ok()) out.detail = "relation " + r.to_string();
        out.status = combine(out.status, s);
        out.degree = std::max(out.degree, m.degree);
    }
    return out;
}

CheckResult check_antipode_axiom(const PresentedHopf& h, int d) {
    require_complete(h);
    const auto& gens = h.gens();
    const FieldDesc& f = h.field();
    CheckResult out = CheckResult::pass("antipode.axiom", "", d);
    for (size_t i = 0; i < gens->size(); ++i) {
        NCPoly left(gens, f), right(gens, f);
        for (const auto& [k, c] : h.comult[i].terms()) {
            NCPoly w1 = NCPoly::monomial(gens, k.first, Scalar::one(f));
            NCPoly w2 = NCPoly::monomial(gens, k.second, Scalar::one(f));
            left += (apply_anti_map(h.antipode, w1) * w2).scaled(c);
            right += (w1 * apply_anti_map(h.antipode, w2)).scaled(c);
        }
        NCPoly eps = NCPoly::one(gens, f).scaled(h.counit[i]);
        for (const NCPoly* side : {&left, &right}) {
            MembershipResult m = member_at(*side - eps, *h.pres, d);
            CheckStatus s = status_of(m.status);
            if (s != CheckStatus::pass && out.ok()) out.detail = "generator " + gens->name(i);
            out.status = combine(out.status, s);
            out.degree = std::max(out.degree, m.degree);
        }
    }
    return out;
}

CheckResult check_antipode_inverse(const PresentedHopf& h, int d) {
    require_complete(h);
    if (!h.antipode_inv) fail(errc::missing_inverse, "no antipode inverse data");
    const auto& gens = h.gens();
    CheckResult out = CheckResult::pass("antipode.inverse", "", d);
    for (size_t i = 0; i < gens->size(); ++i) {
        NCPoly g = NCPoly::generator(gens, h.field(), i);
        NCPoly a = apply_anti_map(h.antipode, apply_anti_map(*h.antipode_inv, g)) - g;
        NCPoly b = apply_anti_map(*h.antipode_inv, apply_anti_map(h.antipode, g)) - g;
        for (const NCPoly* p : {&a, &b}) {
            MembershipResult m = member_at(*p, *h.pres, d);
            CheckStatus s = status_of(m.status);
            if (s != CheckStatus::pass && out.ok()) out.detail = "generator " + gens->name(i);
            out.status = combine(out.status, s);
            out.degree = std::max(out.degree, m.degree);
        }
    }
    return out;
}

CheckResult check_group_like(const PresentedHopf& h, const GroupLikeElement& g, int d) {
    require_complete(h);
    CheckResult out = CheckResult::pass("group_like", "", d);
    auto fold = [&](CheckStatus s, const std::string& what, int deg) {
        if (s != CheckStatus::pass && out.ok()) out.detail = what;
        out.status = combine(out.status, s);
        out.degree = std::max(out.degree, deg);
    };

    TensorPoly diff = extend_comult(h, g.element) - TensorPoly::tensor(g.element, g.element);
    MembershipResult m = tensor_member_at(diff, *h.pres, d);
    fold(status_of(m.status), "comultiplication not diagonal", m.degree);

    if (!(extend_counit(h, g.element) == Scalar::one(h.field())))
        fold(CheckStatus::fail, "counit value is not 1", d);

    NCPoly one = NCPoly::one(h.gens(), h.field());
    for (const NCPoly& p : {g.element * g.inverse - one, g.inverse * g.element - one}) {
        MembershipResult im = member_at(p, *h.pres, d);
        fold(status_of(im.status), "inverse fails", im.degree);
    }
    return out;
}

CheckResult check_sovereign_element(const PresentedHopf& h, const GroupLikeElement& g, int d) {
    require_complete(h);
    if (!h.antipode_inv) fail(errc::missing_inverse, "sovereign check needs the antipode inverse");
    const auto& gens = h.gens();
    CheckResult out = CheckResult::pass("sovereign_element", "", d);
    for (size_t i = 0; i < gens->size(); ++i) {
        NCPoly x = NCPoly::generator(gens, h.field(), i);
        NCPoly lhs = apply_anti_map(*h.antipode_inv, x);
        NCPoly rhs = g.element * apply_anti_map(h.antipode, x) * g.inverse;
        MembershipResult m = member_at(lhs - rhs, *h.pres, d);
        CheckStatus s = status_of(m.status);
        if (s != CheckStatus::pass && out.ok()) out.detail = "generator " + gens->name(i);
        out.status = combine(out.status, s);
        out.degree = std::max(out.degree, m.degree);
    }
    return out;
}

Report verify_presented_hopf(const PresentedHopf& h, int d) {
    Report rep;
    rep.add(check_comult_well_defined(h, d));
    rep.add(check_counit_well_defined(h));
    rep.add(check_antipode_well_defined(h, d));
    rep.add(check_antipode_axiom(h, d));
    if (h.antipode_inv) rep.add(check_antipode_inverse(h, d));
    if (h.sovereign) {
        rep.add(check_group_like(h, *h.sovereign, d));
        if (h.antipode_inv) rep.add(check_sovereign_element(h, *h.sovereign, d));
    }
    for (const auto& n : h.notes) rep.notes.push_back(n);
    return rep;
}

PresentedHopf builtin_Hn(size_t n) {
    if (n < 1) fail(errc::invalid_argument, "n must be at least 1");
    const FieldDesc Q = FieldDesc::rationals();
    std::vector<std::string> names;
    for (size_t i = 1; i <= n; ++i) names.push_back("X" + std::to_string(i));
    names.push_back("Phi");
    names.push_back("PhiInv");
    auto gens = std::make_shared<GenSet>(names);
    size_t P = n, Pi = n + 1;

    NCPoly one = NCPoly::one(gens, Q);
    NCPoly phi = NCPoly::generator(gens, Q, P);
    NCPoly phi_inv = NCPoly::generator(gens, Q, Pi);
    auto pres = std::make_shared<Presentation>(
        gens, Q, std::vector<NCPoly>{phi * phi_inv - one, phi_inv * phi - one});

    // Non-membership certificate: Phi -> diag(1,2), X_i -> strictly upper.
    Matrix pm(2, 2, Q), pim(2, 2, Q), xm(2, 2, Q);
    pm.at(0, 0) = Scalar::one(Q);
    pm.at(1, 1) = Scalar::from_int(Q, 2);
    pim = pm.inverse();
    xm.at(0, 1) = Scalar::one(Q);
    std::vector<Matrix> images(n, xm);
    images.push_back(pm);
    images.push_back(pim);
    pres->attach_refuter(MatrixRep{std::move(images)});

    PresentedHopf h;
    h.pres = pres;
    for (size_t i = 0; i < n; ++i) {
        NCPoly xi = NCPoly::generator(gens, Q, i);
        h.comult.push_back(TensorPoly::tensor(one, xi) + TensorPoly::tensor(xi, phi_inv));
        h.counit.push_back(Scalar::zero(Q));
    }
    h.comult.push_back(TensorPoly::tensor(phi, phi));
    h.comult.push_back(TensorPoly::tensor(phi_inv, phi_inv));
    h.counit.push_back(Scalar::one(Q));
    h.counit.push_back(Scalar::one(Q));

    std::vector<NCPoly> s, sinv;
    for (size_t i = 0; i < n; ++i) {
        NCPoly xi = NCPoly::generator(gens, Q, i);
        s.push_back(-(xi * phi));
        sinv.push_back(-(phi * xi));
    }
    s.push_back(phi_inv);
    s.push_back(phi);
    sinv.push_back(phi_inv);
    sinv.push_back(phi);
    h.antipode = std::move(s);
    h.antipode_inv = std::move(sinv);
    h.sovereign = GroupLikeElement{phi, phi_inv};
    h.notes.push_back("comultiplication uses 1(x)X_i + X_i(x)PhiInv; the antipode "
                      "S(X_i) = -X_i Phi and its inverse S^{-1}(X_i) = -Phi X_i are the "
                      "unique values compatible with the antipode axiom (derived, not given)");
    return h;
}

PresentedHopf builtin_sweedler_presented() {
    const FieldDesc Q = FieldDesc::rationals();
    auto gens = std::make_shared<GenSet>(std::vector<std::string>{"g", "x"});
    NCPoly one = NCPoly::one(gens, Q);
    NCPoly g = NCPoly::generator(gens, Q, 0);
    NCPoly x = NCPoly::generator(gens, Q, 1);
    auto pres = std::make_shared<Presentation>(
        gens, Q, std::vector<NCPoly>{g * g - one, x * x, x * g + g * x});

    Matrix gm(2, 2, Q), xm(2, 2, Q);
    gm.at(0, 0) = Scalar::one(Q);
    gm.at(1, 1) = Scalar::from_int(Q, -1);
    xm.at(0, 1) = Scalar::one(Q);
    pres->attach_refuter(MatrixRep{{gm, xm}});

    PresentedHopf h;
    h.pres = pres;
    h.comult = {TensorPoly::tensor(g, g),
                TensorPoly::tensor(one, x) + TensorPoly::tensor(x, g)};
    h.counit = {Scalar::one(Q), Scalar::zero(Q)};
    h.antipode = {g, g * x};
    h.antipode_inv = std::vector<NCPoly>{g, -(g * x)};
    h.sovereign = GroupLikeElement{g, g};
    return h;
}

PresentedHopf builtin_laurent() {
    const FieldDesc Q = FieldDesc::rationals();
    auto gens = std::make_shared<GenSet>(std::vector<std::string>{"t", "tinv"});
    NCPoly one = NCPoly::one(gens, Q);
    NCPoly t = NCPoly::generator(gens, Q, 0);
    NCPoly ti = NCPoly::generator(gens, Q, 1);
    auto pres = std::make_shared<Presentation>(
        gens, Q, std::vector<NCPoly>{t * ti - one, ti * t - one});

    Matrix tm(1, 1, Q), tim(1, 1, Q);
    tm.at(0, 0) = Scalar::from_int(Q, 2);
    tim.at(0, 0) = Scalar::from_rational(Q, mpq_class(1, 2));
    pres->attach_refuter(MatrixRep{{tm, tim}});

    PresentedHopf h;
    h.pres = pres;
    h.comult = {TensorPoly::tensor(t, t), TensorPoly::tensor(ti, ti)};
    h.counit = {Scalar::one(Q), Scalar::one(Q)};
    h.antipode = {ti, t};
    h.antipode_inv = std::vector<NCPoly>{ti, t};
    h.sovereign = GroupLikeElement{one, one};
    return h;
}

} // namespace cosov
