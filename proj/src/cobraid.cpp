#include "cosov/cobraid.hpp"

#include <sstream>

namespace cosov {

namespace {

NCPoly mono(const GenSetPtr& gens, const FieldDesc& f, const Word& w) {
    return NCPoly::monomial(gens, w, Scalar::one(f));
}

Scalar eps_word(const PresentedHopf& h, const Word& w) {
    return apply_scalar_map_word(h.counit, h.field(), w);
}

/// Word-level recursion shared by sigma and sigma^{-1}. `inv` flips the
/// order in which the two coproduct legs are consumed, matching the
/// reversed recursion satisfied by the convolution inverse.
Scalar eval_word(const Cobraiding& c, const Word& x, const Word& y, bool inv,
                 PeelStrategy strategy) {
    const PresentedHopf& h = c.hopf;
    const FieldDesc& f = h.field();
    if (x.empty()) return eps_word(h, y);
    if (y.empty()) return eps_word(h, x);
    size_t n = h.gens()->size();
    const std::vector<Scalar>& table = inv ? c.inv_table : c.table;
    if (x.size() == 1 && y.size() == 1) return table[x[0] * n + y[0]];

    const bool memoize = strategy == PeelStrategy::first_letter;
    std::pair<Word, Word> key{x, y};
    if (memoize) {
        std::lock_guard<std::mutex> lk(c.memo->mutex);
        auto& m = inv ? c.memo->inv : c.memo->fwd;
        auto it = m.find(key);
        if (it != m.end()) return it->second;
    }

    Scalar out = Scalar::zero(f);
    if (x.size() >= 2) {
        // split the left word and pair the factors with the legs of
        // Delta(y): sigma(ab, y) = sum sigma(a, y_1) sigma(b, y_2)
        // (legs swapped for the inverse form).
        Word head, tail;
        if (strategy == PeelStrategy::first_letter) {
            head = {x[0]};
            tail.assign(x.begin() + 1, x.end());
        } else {
            head.assign(x.begin(), x.end() - 1);
            tail = {x.back()};
        }
        TensorPoly dy = extend_comult(h, mono(h.gens(), f, y));
        for (const auto& [legs, cc] : dy.terms()) {
            Scalar a = eval_word(c, inv ? tail : head, legs.first, inv, strategy);
            Scalar b = eval_word(c, inv ? head : tail, legs.second, inv, strategy);
            out += cc * a * b;
        }
    } else {
        // single generator on the left: split the right word and pair it
        // with the legs of the generator coproduct:
        // sigma(x, yz) = sum sigma(x_1, z) sigma(x_2, y)
        // (the inverse form pairs in the direct order).
        Word front, back;
        if (strategy == PeelStrategy::first_letter) {
            front.assign(y.begin(), y.end() - 1);
            back = {y.back()};
        } else {
            front = {y[0]};
            back.assign(y.begin() + 1, y.end());
        }
        const TensorPoly& dx = h.comult[x[0]];
        for (const auto& [legs, cc] : dx.terms()) {
            Scalar a = eval_word(c, legs.first, inv ? front : back, inv, strategy);
            Scalar b = eval_word(c, legs.second, inv ? back : front, inv, strategy);
            out += cc * a * b;
        }
    }

    if (memoize) {
        std::lock_guard<std::mutex> lk(c.memo->mutex);
        auto& m = inv ? c.memo->inv : c.memo->fwd;
        m.emplace(std::move(key), out);
    }
    return out;
}

Scalar eval_poly(const Cobraiding& c, const NCPoly& p, const NCPoly& r, bool inv,
                 PeelStrategy strategy) {
    Scalar out = Scalar::zero(c.hopf.field());
    for (const auto& [wx, cx] : p.terms())
        for (const auto& [wy, cy] : r.terms())
            out += cx * cy * eval_word(c, wx, wy, inv, strategy);
    return out;
}

struct Triple {
    Word a, b, c;
    Scalar coeff;
};

/// (Delta (x) id) Delta on a word, as explicit word triples.
std::vector<Triple> triple_comult(const PresentedHopf& h, const Word& w) {
    std::vector<Triple> out;
    TensorPoly first = extend_comult(h, mono(h.gens(), h.field(), w));
    for (const auto& [legs, c1] : first.terms()) {
        TensorPoly second = extend_comult(h, mono(h.gens(), h.field(), legs.first));
        for (const auto& [inner, c2] : second.terms())
            out.push_back({inner.first, inner.second, legs.second, c1 * c2});
    }
    return out;
}

Scalar lambda_word(const Cobraiding& c, const Word& w) {
    const PresentedHopf& h = c.hopf;
    Scalar out = Scalar::zero(h.field());
    TensorPoly d = extend_comult(h, mono(h.gens(), h.field(), w));
    for (const auto& [legs, cc] : d.terms()) {
        NCPoly s = extend_antipode(h, mono(h.gens(), h.field(), legs.second));
        out += cc * eval_poly(c, mono(h.gens(), h.field(), legs.first), s, false,
                              PeelStrategy::first_letter);
    }
    return out;
}

Scalar beta_word(const Cobraiding& c, const Word& w) {
    const PresentedHopf& h = c.hopf;
    Scalar out = Scalar::zero(h.field());
    TensorPoly d = extend_comult(h, mono(h.gens(), h.field(), w));
    for (const auto& [legs, cc] : d.terms()) {
        NCPoly s = extend_antipode(h, mono(h.gens(), h.field(), legs.first));
        out += cc * eval_poly(c, s, mono(h.gens(), h.field(), legs.second), true,
                              PeelStrategy::first_letter);
    }
    return out;
}

std::string pair_label(const GenSet& gens, const Word& x, const Word& y) {
    return "(" + word_to_string(gens, x) + ", " + word_to_string(gens, y) + ")";
}

/// All word pairs with total degree <= d.
std::vector<std::pair<Word, Word>> word_pairs(size_t num_gens, int d) {
    std::vector<std::pair<Word, Word>> out;
    std::vector<Word> words = words_up_to(num_gens, static_cast<size_t>(d));
    for (const Word& x : words)
        for (const Word& y : words)
            if (x.size() + y.size() <= static_cast<size_t>(d)) out.emplace_back(x, y);
    return out;
}

} // namespace

Cobraiding make_cobraiding(PresentedHopf hopf, std::vector<Scalar> table,
                           std::vector<Scalar> inv_table) {
    size_t n = hopf.gens()->size();
    if (table.size() != n * n)
        throw Error(errc::dimension_mismatch, "cobraiding table must have one entry per "
                                              "generator pair");
    if (!inv_table.empty() && inv_table.size() != n * n)
        throw Error(errc::dimension_mismatch, "cobraiding inverse table has the wrong size");
    for (size_t g = 0; g < n; ++g)
        for (const auto& [legs, cc] : hopf.comult[g].terms()) {
            (void)cc;
            if (legs.first.size() > 1 || legs.second.size() > 1)
                throw Error(errc::invalid_argument,
                            "cobraiding evaluation needs generator coproducts with legs of "
                            "degree at most 1");
        }

    Cobraiding c{std::move(hopf), std::move(table), {}};
    // derive sigma^{-1}(g_i, g_j) = sigma(S(g_i), g_j) and cross-check any
    // explicitly supplied table against it
    std::vector<Scalar> derived;
    derived.reserve(n * n);
    const FieldDesc& f = c.hopf.field();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            derived.push_back(eval_poly(c, c.hopf.antipode[i],
                                        NCPoly::generator(c.hopf.gens(), f, j), false,
                                        PeelStrategy::first_letter));
    if (!inv_table.empty()) {
        for (size_t i = 0; i < n * n; ++i)
            if (!(inv_table[i] == derived[i]))
                throw Error(errc::inverse_check_failed,
                            "supplied sigma^{-1} table disagrees with sigma(S(x), y) at "
                            "generator pair " +
                                std::to_string(i));
        c.inv_table = std::move(inv_table);
    } else {
        c.inv_table = std::move(derived);
    }
    return c;
}

Scalar sigma_eval(const Cobraiding& c, const NCPoly& p, const NCPoly& r,
                  PeelStrategy strategy) {
    return eval_poly(c, p, r, false, strategy);
}

Scalar sigma_inv_eval(const Cobraiding& c, const NCPoly& p, const NCPoly& r) {
    return eval_poly(c, p, r, true, PeelStrategy::first_letter);
}

Report check_cobraiding(const Cobraiding& c, int d) {
    Report rep;
    const PresentedHopf& h = c.hopf;
    const FieldDesc& f = h.field();
    const GenSetPtr& gens = h.gens();
    size_t n = gens->size();

    // (A.1): sum sigma(x_1, y_1) x_2 y_2 == sum y_1 x_1 sigma(x_2, y_2)
    // modulo the ideal, on every generator pair
    CheckStatus a1 = CheckStatus::pass;
    std::string a1_detail;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            NCPoly p = NCPoly::zero(gens, f);
            for (const auto& [lx, cx] : h.comult[i].terms())
                for (const auto& [ly, cy] : h.comult[j].terms()) {
                    Scalar lead = cx * cy * eval_word(c, lx.first, ly.first, false,
                                                      PeelStrategy::first_letter);
                    p.add_term(concat(lx.second, ly.second), lead);
                    Scalar trail = cx * cy * eval_word(c, lx.second, ly.second, false,
                                                       PeelStrategy::first_letter);
                    p.add_term(concat(ly.first, lx.first), -trail);
                }
            MembershipResult m = ideal_membership(p, *h.pres, d);
            CheckStatus s = m.status == Membership::member ? CheckStatus::pass
                            : m.status == Membership::not_member ? CheckStatus::fail
                                                                 : CheckStatus::inconclusive;
            if (s != CheckStatus::pass && a1_detail.empty())
                a1_detail = "pair (" + gens->name(i) + ", " + gens->name(j) + ")";
            a1 = combine(a1, s);
        }
    rep.add({"cobraiding.braiding_relation", a1, a1_detail, d});

    // sigma must kill the relation ideal in each slot (exact scalars)
    CheckStatus van = CheckStatus::pass;
    std::string van_detail;
    for (const NCPoly& r : h.pres->relations()) {
        int rest = d - static_cast<int>(r.degree());
        if (rest < 0) continue;
        for (const Word& w : words_up_to(n, static_cast<size_t>(rest))) {
            NCPoly wm = mono(gens, f, w);
            if (!sigma_eval(c, r, wm).is_zero() || !sigma_eval(c, wm, r).is_zero()) {
                van = CheckStatus::fail;
                if (van_detail.empty())
                    van_detail = "relation " + r.to_string() + " against " +
                                 word_to_string(*gens, w);
            }
        }
    }
    rep.add({"cobraiding.vanishes_on_ideal", van, van_detail, d});

    // sigma * sigma^{-1} = eps (x) eps = sigma^{-1} * sigma on word pairs
    CheckStatus conv = CheckStatus::pass;
    std::string conv_detail;
    for (const auto& [x, y] : word_pairs(n, d)) {
        TensorPoly dx = extend_comult(h, mono(gens, f, x));
        TensorPoly dy = extend_comult(h, mono(gens, f, y));
        Scalar fwd = Scalar::zero(f), bwd = Scalar::zero(f);
        for (const auto& [lx, cx] : dx.terms())
            for (const auto& [ly, cy] : dy.terms()) {
                fwd += cx * cy * eval_word(c, lx.first, ly.first, false, PeelStrategy::first_letter) *
                       eval_word(c, lx.second, ly.second, true, PeelStrategy::first_letter);
                bwd += cx * cy * eval_word(c, lx.first, ly.first, true, PeelStrategy::first_letter) *
                       eval_word(c, lx.second, ly.second, false, PeelStrategy::first_letter);
            }
        Scalar expected = eps_word(h, x) * eps_word(h, y);
        if (!(fwd == expected) || !(bwd == expected)) {
            conv = CheckStatus::fail;
            if (conv_detail.empty()) conv_detail = pair_label(*gens, x, y);
        }
    }
    rep.add({"cobraiding.convolution_inverse", conv, conv_detail, d});
    return rep;
}

Scalar lambda_form(const Cobraiding& c, const NCPoly& p) {
    Scalar out = Scalar::zero(c.hopf.field());
    for (const auto& [w, cc] : p.terms()) out += cc * lambda_word(c, w);
    return out;
}

Scalar beta_form(const Cobraiding& c, const NCPoly& p) {
    Scalar out = Scalar::zero(c.hopf.field());
    for (const auto& [w, cc] : p.terms()) out += cc * beta_word(c, w);
    return out;
}

CheckResult check_lambda_beta_inverse(const Cobraiding& c, int d) {
    const PresentedHopf& h = c.hopf;
    const FieldDesc& f = h.field();
    for (const Word& w : words_up_to(h.gens()->size(), static_cast<size_t>(d))) {
        TensorPoly dw = extend_comult(h, mono(h.gens(), f, w));
        Scalar lb = Scalar::zero(f), bl = Scalar::zero(f);
        for (const auto& [legs, cc] : dw.terms()) {
            lb += cc * lambda_word(c, legs.first) * beta_word(c, legs.second);
            bl += cc * beta_word(c, legs.first) * lambda_word(c, legs.second);
        }
        Scalar expected = eps_word(h, w);
        if (!(lb == expected) || !(bl == expected))
            return CheckResult::fail("forms.lambda_beta_inverse",
                                     "word " + word_to_string(*h.gens(), w), d);
    }
    return CheckResult::pass("forms.lambda_beta_inverse", "", d);
}

CheckResult check_s2_convolution(const Cobraiding& c, int d) {
    const PresentedHopf& h = c.hopf;
    const FieldDesc& f = h.field();
    CheckStatus status = CheckStatus::pass;
    std::string detail;
    for (size_t g = 0; g < h.gens()->size(); ++g) {
        NCPoly rhs = NCPoly::zero(h.gens(), f);
        for (const Triple& t : triple_comult(h, {static_cast<uint16_t>(g)}))
            rhs.add_term(t.b, t.coeff * beta_word(c, t.a) * lambda_word(c, t.c));
        NCPoly lhs = extend_antipode(h, h.antipode[g]);
        CheckResult r = check_ideal_equal("s2", lhs, rhs, *h.pres, d);
        if (r.status != CheckStatus::pass && detail.empty())
            detail = "generator " + h.gens()->name(g);
        status = combine(status, r.status);
    }
    return {"forms.s2_beta_id_lambda", status, detail, d};
}

bool lemma_A2_holds(const Cobraiding& c, const Word& x, const Word& y) {
    const PresentedHopf& h = c.hopf;
    const FieldDesc& f = h.field();
    Scalar lhs = beta_word(c, concat(x, y));
    Scalar rhs = Scalar::zero(f);
    for (const Triple& tx : triple_comult(h, x))
        for (const Triple& ty : triple_comult(h, y))
            rhs += tx.coeff * ty.coeff *
                   eval_word(c, ty.a, tx.a, false, PeelStrategy::first_letter) *
                   beta_word(c, tx.b) * beta_word(c, ty.b) *
                   eval_word(c, tx.c, ty.c, false, PeelStrategy::first_letter);
    return lhs == rhs;
}

CheckResult check_lemma_A2(const Cobraiding& c, int d) {
    for (const auto& [x, y] : word_pairs(c.hopf.gens()->size(), d))
        if (!lemma_A2_holds(c, x, y))
            return CheckResult::fail("forms.lemma_A2", pair_label(*c.hopf.gens(), x, y), d);
    return CheckResult::pass("forms.lemma_A2", "", d);
}

CheckResult check_A5_A7(const Cobraiding& c, int d) {
    const PresentedHopf& h = c.hopf;
    const FieldDesc& f = h.field();
    for (const auto& [x, y] : word_pairs(h.gens()->size(), d)) {
        NCPoly xm = mono(h.gens(), f, x), ym = mono(h.gens(), f, y);
        NCPoly sx = extend_antipode(h, xm), sy = extend_antipode(h, ym);
        Scalar s = sigma_eval(c, xm, ym);
        if (!(sigma_inv_eval(c, xm, ym) == sigma_eval(c, sx, ym)))
            return CheckResult::fail("forms.antipode_slots",
                                     "sigma^{-1}(x,y) != sigma(S(x),y) at " +
                                         pair_label(*h.gens(), x, y),
                                     d);
        if (!(s == sigma_inv_eval(c, xm, sy)))
            return CheckResult::fail("forms.antipode_slots",
                                     "sigma(x,y) != sigma^{-1}(x,S(y)) at " +
                                         pair_label(*h.gens(), x, y),
                                     d);
        if (!(s == sigma_eval(c, sx, sy)))
            return CheckResult::fail("forms.antipode_slots",
                                     "sigma(x,y) != sigma(S(x),S(y)) at " +
                                         pair_label(*h.gens(), x, y),
                                     d);
    }
    return CheckResult::pass("forms.antipode_slots", "", d);
}

Scalar cotwist_eval(const CotwistData& t, const FieldDesc& f, const NCPoly& p) {
    Scalar out = Scalar::zero(f);
    for (const auto& [w, cc] : p.terms()) out += cc * t.tau(w);
    return out;
}

Scalar cotwist_inv_eval(const CotwistData& t, const FieldDesc& f, const NCPoly& p) {
    Scalar out = Scalar::zero(f);
    for (const auto& [w, cc] : p.terms()) out += cc * t.tau_inv(w);
    return out;
}

Report check_cotwist(const Cobraiding& c, const CotwistData& t, int d) {
    Report rep;
    const PresentedHopf& h = c.hopf;
    const FieldDesc& f = h.field();
    size_t n = h.gens()->size();

    CheckStatus central = CheckStatus::pass, inverse = CheckStatus::pass;
    std::string central_detail, inverse_detail;
    for (const Word& w : words_up_to(n, static_cast<size_t>(d))) {
        TensorPoly dw = extend_comult(h, mono(h.gens(), f, w));
        NCPoly comm = NCPoly::zero(h.gens(), f);
        Scalar conv = Scalar::zero(f);
        for (const auto& [legs, cc] : dw.terms()) {
            comm.add_term(legs.second, cc * t.tau(legs.first));
            comm.add_term(legs.first, -(cc * t.tau(legs.second)));
            conv += cc * t.tau(legs.first) * t.tau_inv(legs.second);
        }
        MembershipResult m = ideal_membership(comm, *h.pres, d);
        CheckStatus s = m.status == Membership::member ? CheckStatus::pass
                        : m.status == Membership::not_member ? CheckStatus::fail
                                                             : CheckStatus::inconclusive;
        if (s != CheckStatus::pass && central_detail.empty())
            central_detail = "word " + word_to_string(*h.gens(), w);
        central = combine(central, s);
        if (!(conv == eps_word(h, w))) {
            inverse = CheckStatus::fail;
            if (inverse_detail.empty()) inverse_detail = "word " + word_to_string(*h.gens(), w);
        }
    }
    rep.add({"cotwist.central", central, central_detail, d});
    rep.add({"cotwist.convolution_inverse", inverse, inverse_detail, d});

    CheckStatus eqn = CheckStatus::pass;
    std::string eqn_detail;
    for (const auto& [x, y] : word_pairs(n, d)) {
        Scalar lhs = t.tau(concat(x, y));
        Scalar rhs = Scalar::zero(f);
        for (const Triple& tx : triple_comult(h, x))
            for (const Triple& ty : triple_comult(h, y))
                rhs += tx.coeff * ty.coeff *
                       eval_word(c, ty.a, tx.a, false, PeelStrategy::first_letter) *
                       t.tau(tx.b) * t.tau(ty.b) *
                       eval_word(c, tx.c, ty.c, false, PeelStrategy::first_letter);
        if (!(lhs == rhs)) {
            eqn = CheckStatus::fail;
            if (eqn_detail.empty()) eqn_detail = pair_label(*h.gens(), x, y);
        }
    }
    rep.add({"cotwist.twist_equation", eqn, eqn_detail, d});
    return rep;
}

CotwistData thm_A3_forward(const Cobraiding& c, const GenCharacter& phi) {
    const PresentedHopf& h = c.hopf;
    if (!check_character(h, phi).ok())
        throw Error(errc::invalid_argument, "thm_A3_forward needs a character");
    GenCharacter phi_inv = character_inverse(h, phi);
    Cobraiding cc = c; // shares the memo
    CotwistData out;
    out.tau = [cc, phi](const Word& w) {
        const PresentedHopf& hh = cc.hopf;
        const FieldDesc& f = hh.field();
        Scalar v = Scalar::zero(f);
        TensorPoly dw = extend_comult(hh, mono(hh.gens(), f, w));
        for (const auto& [legs, k] : dw.terms())
            v += k * apply_scalar_map_word(phi.values, f, legs.first) *
                 beta_word(cc, legs.second);
        return v;
    };
    out.tau_inv = [cc, phi_inv](const Word& w) {
        const PresentedHopf& hh = cc.hopf;
        const FieldDesc& f = hh.field();
        Scalar v = Scalar::zero(f);
        TensorPoly dw = extend_comult(hh, mono(hh.gens(), f, w));
        for (const auto& [legs, k] : dw.terms())
            v += k * lambda_word(cc, legs.first) *
                 apply_scalar_map_word(phi_inv.values, f, legs.second);
        return v;
    };
    return out;
}

GenCharacter thm_A3_backward(const Cobraiding& c, const CotwistData& t) {
    const PresentedHopf& h = c.hopf;
    const FieldDesc& f = h.field();
    GenCharacter out;
    for (size_t g = 0; g < h.gens()->size(); ++g) {
        Scalar v = Scalar::zero(f);
        for (const auto& [legs, cc] : h.comult[g].terms())
            v += cc * t.tau(legs.first) * lambda_word(c, legs.second);
        out.values.push_back(v);
    }
    return out;
}

Cobraiding builtin_sweedler_cobraiding(const Scalar& xx) {
    PresentedHopf h = builtin_sweedler_presented();
    const FieldDesc& f = h.field();
    Scalar one = Scalar::one(f), zero = Scalar::zero(f);
    // the full one-parameter family: rows/columns indexed (g, x)
    std::vector<Scalar> table{-one, zero, zero, xx};
    std::vector<Scalar> inv{-one, zero, zero, xx};
    return make_cobraiding(std::move(h), std::move(table), std::move(inv));
}

Cobraiding trivial_cobraiding(PresentedHopf hopf) {
    size_t n = hopf.gens()->size();
    std::vector<Scalar> table;
    table.reserve(n * n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) table.push_back(hopf.counit[i] * hopf.counit[j]);
    return make_cobraiding(std::move(hopf), std::move(table));
}

} // namespace cosov
