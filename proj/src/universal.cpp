#include "cosov/universal.hpp"

namespace cosov {

namespace {

std::string idx_name(const char* base, size_t i, size_t j) {
    return std::string(base) + std::to_string(i + 1) + std::to_string(j + 1);
}

struct HFIndex {
    size_t n;
    size_t u(size_t i, size_t j) const { return i * n + j; }
    size_t v(size_t i, size_t j) const { return n * n + i * n + j; }
};

// (F tu F^{-1})_ij as a free-algebra element in the u generators.
NCPoly a_entry(const GenSetPtr& gens, const FieldDesc& f, const HFIndex& ix, const Matrix& F,
               const Matrix& Finv, size_t i, size_t j) {
    NCPoly out(gens, f);
    for (size_t p = 0; p < ix.n; ++p)
        for (size_t r = 0; r < ix.n; ++r) {
            Scalar c = F.at(i, p) * Finv.at(r, j);
            if (!c.is_zero()) out.add_term({(uint16_t)ix.u(r, p)}, c);
        }
    return out;
}

MatrixRep scalar_rep(const FieldDesc& f, const Matrix& t, const Matrix& w) {
    // character-style refuter: u_ij -> t_ij, v_ij -> w_ij as 1x1 matrices
    MatrixRep rep;
    size_t n = t.rows();
    auto push = [&](const Scalar& s) {
        Matrix m(1, 1, f);
        m.at(0, 0) = s;
        rep.images.push_back(m);
    };
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) push(t.at(i, j));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) push(w.at(i, j));
    return rep;
}

} // namespace

HFAlgebra build_HF(const Matrix& F) {
    if (!F.is_square() || F.rows() == 0) fail(errc::dimension_mismatch, "F must be square");
    const FieldDesc f = F.field();
    Matrix Finv = F.inverse(); // throws errc::singular
    size_t n = F.rows();
    HFIndex ix{n};

    std::vector<std::string> names;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) names.push_back(idx_name("u", i, j));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) names.push_back(idx_name("v", i, j));
    GenSetPtr gens = std::make_shared<const GenSet>(names);

    auto gen = [&](size_t idx) { return NCPoly::generator(gens, f, idx); };
    auto delta = [&](size_t i, size_t j) {
        return i == j ? Scalar::one(f) : Scalar::zero(f);
    };

    std::vector<NCPoly> relations;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) { // (u tv)_ij = delta_ij
            NCPoly r(gens, f);
            for (size_t k = 0; k < n; ++k) r += gen(ix.u(i, k)) * gen(ix.v(j, k));
            r -= NCPoly::one(gens, f).scaled(delta(i, j));
            relations.push_back(r);
        }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) { // (tv u)_ij = delta_ij
            NCPoly r(gens, f);
            for (size_t k = 0; k < n; ++k) r += gen(ix.v(k, i)) * gen(ix.u(k, j));
            r -= NCPoly::one(gens, f).scaled(delta(i, j));
            relations.push_back(r);
        }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) { // (v F tu F^{-1})_ij = delta_ij
            NCPoly r(gens, f);
            for (size_t k = 0; k < n; ++k)
                r += gen(ix.v(i, k)) * a_entry(gens, f, ix, F, Finv, k, j);
            r -= NCPoly::one(gens, f).scaled(delta(i, j));
            relations.push_back(r);
        }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) { // (F tu F^{-1} v)_ij = delta_ij
            NCPoly r(gens, f);
            for (size_t k = 0; k < n; ++k)
                r += a_entry(gens, f, ix, F, Finv, i, k) * gen(ix.v(k, j));
            r -= NCPoly::one(gens, f).scaled(delta(i, j));
            relations.push_back(r);
        }

    auto pres = std::make_shared<Presentation>(gens, f, std::move(relations));

    // refuting characters: u -> T, v -> tT^{-1} whenever tT commutes with F
    {
        Matrix two = Matrix::identity(n, f);
        for (size_t i = 0; i < n; ++i) two.at(i, i) = Scalar::from_int(f, 2);
        Matrix half = Matrix::identity(n, f);
        for (size_t i = 0; i < n; ++i) half.at(i, i) = Scalar::from_rational(f, mpq_class(1, 2));
        pres->attach_refuter(scalar_rep(f, two, half));
        pres->attach_refuter(scalar_rep(f, F.transpose(), Finv));
        bool diagonal = true;
        for (size_t i = 0; i < n && diagonal; ++i)
            for (size_t j = 0; j < n; ++j)
                if (i != j && !F.at(i, j).is_zero()) { diagonal = false; break; }
        if (diagonal) {
            Matrix t = Matrix::identity(n, f), w = Matrix::identity(n, f);
            for (size_t i = 0; i < n; ++i) {
                t.at(i, i) = Scalar::from_int(f, (long)(i + 2));
                w.at(i, i) = Scalar::from_rational(f, mpq_class(1, (long)(i + 2)));
            }
            pres->attach_refuter(scalar_rep(f, t, w));
        }
    }

    HFAlgebra h;
    h.F = F;
    h.n = n;
    h.hopf.pres = pres;
    for (size_t block = 0; block < 2; ++block)
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                size_t base = block * n * n;
                TensorPoly c(gens, f);
                for (size_t k = 0; k < n; ++k)
                    c = c + TensorPoly::tensor(gen(base + ix.u(i, k)), gen(base + ix.u(k, j)));
                h.hopf.comult.push_back(c);
                h.hopf.counit.push_back(delta(i, j));
            }
    h.hopf.antipode.reserve(2 * n * n);
    std::vector<NCPoly> sinv;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) h.hopf.antipode.push_back(gen(ix.v(j, i)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            h.hopf.antipode.push_back(a_entry(gens, f, ix, F, Finv, i, j));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) { // S^{-1}(u) = tF tv tF^{-1}
            NCPoly p(gens, f);
            for (size_t p_ = 0; p_ < n; ++p_)
                for (size_t r = 0; r < n; ++r) {
                    Scalar c = F.at(p_, i) * Finv.at(j, r);
                    if (!c.is_zero()) p.add_term({(uint16_t)ix.v(r, p_)}, c);
                }
            sinv.push_back(p);
        }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) sinv.push_back(gen(ix.u(j, i)));
    h.hopf.antipode_inv = std::move(sinv);

    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) h.phi.values.push_back(F.at(j, i));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) h.phi.values.push_back(Finv.at(i, j));

    std::vector<size_t> uidx, vidx;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) uidx.push_back(ix.u(i, j));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) vidx.push_back(ix.v(i, j));
    h.corep_u = generator_matrix_corep(h.hopf, uidx, n, "u");
    h.corep_v = generator_matrix_corep(h.hopf, vidx, n, "v");
    return h;
}

bool hf_trace_flag(const HFAlgebra& h) {
    return h.F.trace().is_zero() || h.F.inverse().trace().is_zero();
}

Report verify_HF(const HFAlgebra& h, int d) {
    Report rep = verify_presented_hopf(h.hopf, d);
    {
        CheckResult c = check_character(h.hopf, h.phi);
        c.name = "hf_character";
        rep.add(c);
    }
    {
        CheckResult c = verify_sovereign_pres(h.hopf, h.phi, d);
        c.name = "hf_sovereign";
        rep.add(c);
    }
    {
        CheckResult c = check_corep(h.hopf, h.corep_u, d);
        c.name = "hf_corep_u";
        rep.add(c);
        c = check_corep(h.hopf, h.corep_v, d);
        c.name = "hf_corep_v";
        rep.add(c);
    }
    DimensionPair du = dims(h.hopf, h.corep_u, h.phi);
    Scalar trf = h.F.trace(), trfi = h.F.inverse().trace();
    if (du.left == trf && du.right == trfi)
        rep.add(CheckResult::pass("hf_dims_u", "(" + du.left.to_string() + ", " +
                                                   du.right.to_string() + ")"));
    else
        rep.add(CheckResult::fail("hf_dims_u", "got (" + du.left.to_string() + ", " +
                                                   du.right.to_string() + "), expected (" +
                                                   trf.to_string() + ", " + trfi.to_string() +
                                                   ")"));
    rep.notes.push_back(std::string("trace flag: ") + (hf_trace_flag(h) ? "raised" : "clear"));
    return rep;
}

namespace {

// Map every relation of src through the generator images into dst's ideal.
CheckResult map_relations(std::string name, const Presentation& src,
                          const std::vector<NCPoly>& images, const Presentation& dst, int d) {
    CheckResult out = CheckResult::pass(std::move(name), "", d);
    for (const auto& r : src.relations()) {
        NCPoly mapped = apply_algebra_map(images, r);
        int eff = std::max<int>(d, (int)mapped.degree());
        MembershipResult m = ideal_membership(mapped, dst, eff);
        CheckStatus s = m.status == Membership::member       ? CheckStatus::pass
                        : m.status == Membership::not_member ? CheckStatus::fail
                                                             : CheckStatus::inconclusive;
        if (s != CheckStatus::pass && out.ok())
            out.detail = "image of " + r.to_string() + " not certified in the target ideal";
        out.status = combine(out.status, s);
        out.degree = std::max(out.degree, m.degree);
    }
    return out;
}

// Images of src's u,v generators given by u -> P u' P^{-1}, v -> Q v' Q^{-1}
// inside dst's free algebra.
std::vector<NCPoly> conjugated_images(const HFAlgebra& dst, const Matrix& p, const Matrix& q) {
    size_t n = dst.n;
    Matrix pinv = p.inverse(), qinv = q.inverse();
    std::vector<NCPoly> images;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            NCPoly e(dst.hopf.gens(), dst.hopf.field());
            for (size_t k = 0; k < n; ++k)
                for (size_t l = 0; l < n; ++l)
                    e += dst.corep_u.at(k, l).scaled(p.at(i, k) * pinv.at(l, j));
            images.push_back(e);
        }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            NCPoly e(dst.hopf.gens(), dst.hopf.field());
            for (size_t k = 0; k < n; ++k)
                for (size_t l = 0; l < n; ++l)
                    e += dst.corep_v.at(k, l).scaled(q.at(i, k) * qinv.at(l, j));
            images.push_back(e);
        }
    return images;
}

} // namespace

CheckResult iso_conjugate(const HFAlgebra& h, const Matrix& k, int d) {
    if (!k.is_square() || k.rows() != h.n) fail(errc::dimension_mismatch, "K size mismatch");
    Matrix kinv = k.inverse(); // throws errc::singular
    HFAlgebra target = build_HF(k * h.F * kinv);

    // phi(u) = tK u tK^{-1}, phi(v) = K^{-1} v K
    CheckResult fwd = map_relations("iso_conjugate", *h.hopf.pres,
                                    conjugated_images(target, k.transpose(), kinv), *target.hopf.pres, d);
    // inverse direction, conjugating back with K^{-1}
    CheckResult bwd = map_relations("iso_conjugate", *target.hopf.pres,
                                    conjugated_images(h, kinv.transpose(), k), *h.hopf.pres, d);
    CheckResult out = fwd;
    out.status = combine(fwd.status, bwd.status);
    if (out.detail.empty()) out.detail = bwd.detail;
    out.degree = std::max(fwd.degree, bwd.degree);
    return out;
}

CheckResult iso_transpose_inverse(const HFAlgebra& h, int d) {
    HFAlgebra target = build_HF(h.F.transpose().inverse());
    size_t n = h.n;
    Matrix finv = h.F.inverse();
    std::vector<NCPoly> images; // psi(u) = v', psi(v) = F u' F^{-1}
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) images.push_back(target.corep_v.at(i, j));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            NCPoly e(target.hopf.gens(), target.hopf.field());
            for (size_t k = 0; k < n; ++k)
                for (size_t l = 0; l < n; ++l)
                    e += target.corep_u.at(k, l).scaled(h.F.at(i, k) * finv.at(l, j));
            images.push_back(e);
        }
    return map_relations("iso_transpose_inverse", *h.hopf.pres, images, *target.hopf.pres, d);
}

bool same_HF_relations(const HFAlgebra& a, const HFAlgebra& b) {
    return Presentation::same_presentation(*a.hopf.pres, *b.hopf.pres);
}

Matrix find_F(const PresentedHopf& h, const MatrixCorep& v) {
    if (!h.antipode_inv) fail(errc::missing_inverse, "find_F needs the antipode inverse");
    size_t n = v.size;
    const FieldDesc& f = h.field();
    std::vector<NCPoly> s(n * n, NCPoly::zero(h.gens(), f));
    std::vector<NCPoly> si(n * n, NCPoly::zero(h.gens(), f));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            s[i * n + j] = extend_antipode(h, v.at(i, j));
            si[i * n + j] = extend_antipode_inv(h, v.at(i, j));
        }

    // coefficient-wise rows of sum_k S(a_ki) x_kj - sum_k x_ik S^{-1}(a_jk) = 0
    std::map<std::pair<std::pair<size_t, size_t>, Word>, size_t> row_of;
    std::vector<std::map<size_t, Scalar>> rows;
    auto row = [&](size_t i, size_t j, const Word& w) -> std::map<size_t, Scalar>& {
        auto key = std::make_pair(std::make_pair(i, j), w);
        auto it = row_of.find(key);
        if (it == row_of.end()) {
            it = row_of.emplace(key, rows.size()).first;
            rows.emplace_back();
        }
        return rows[it->second];
    };
    auto accum = [&](std::map<size_t, Scalar>& r, size_t var, const Scalar& c) {
        auto [it, fresh] = r.emplace(var, c);
        if (!fresh) it->second += c;
    };
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            for (size_t k = 0; k < n; ++k) {
                for (const auto& [w, c] : s[k * n + i].terms()) accum(row(i, j, w), k * n + j, c);
                for (const auto& [w, c] : si[j * n + k].terms())
                    accum(row(i, j, w), i * n + k, -c);
            }
        }

    Matrix a(rows.size(), n * n, f), b(rows.size(), 1, f);
    for (size_t r = 0; r < rows.size(); ++r)
        for (const auto& [var, c] : rows[r]) a.at(r, var) = c;
    SolutionSpace sol;
    try {
        sol = solve_linear(a, b);
    } catch (const Error&) {
        fail(errc::no_solution, "the F-system is inconsistent");
    }

    auto candidate_matrix = [&](const std::vector<long>& coeffs) {
        Matrix m(n, n, f);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                Scalar e = sol.particular.at(i * n + j, 0);
                for (size_t t = 0; t < coeffs.size(); ++t)
                    e += sol.kernel[t].at(i * n + j, 0) * Scalar::from_int(f, coeffs[t]);
                m.at(i, j) = e;
            }
        return m;
    };
    auto certify = [&](const Matrix& F) {
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                NCPoly lhs(h.gens(), f), rhs(h.gens(), f);
                for (size_t k = 0; k < n; ++k) {
                    lhs += s[k * n + i].scaled(F.at(k, j));
                    rhs += si[j * n + k].scaled(F.at(i, k));
                }
                if (!(lhs == rhs)) return false;
            }
        return true;
    };

    static const long scan[] = {-2, -1, 0, 1, 2};
    std::vector<long> coeffs(sol.kernel.size(), scan[0]);
    size_t total = 1;
    for (size_t t = 0; t < sol.kernel.size(); ++t) total *= 5;
    for (size_t step = 0; step < total; ++step) {
        size_t rem = step;
        for (size_t t = 0; t < coeffs.size(); ++t) {
            coeffs[t] = scan[rem % 5];
            rem /= 5;
        }
        Matrix m = candidate_matrix(coeffs);
        try {
            (void)m.inverse();
        } catch (const Error&) {
            continue;
        }
        if (!certify(m)) fail(errc::no_solution, "solution fails the free-algebra certificate");
        return m;
    }
    fail(errc::no_invertible_solution,
         "no invertible combination in the scanned solution space (kernel dimension " +
             std::to_string(sol.kernel.size()) + ")");
}

CheckResult certify_universality(const PresentedHopf& a, const MatrixCorep& v, const Matrix& f,
                                 int d) {
    HFAlgebra h = build_HF(f);
    size_t n = v.size;
    std::vector<NCPoly> images;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) images.push_back(v.at(i, j));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) images.push_back(extend_antipode(a, v.at(j, i)));
    return map_relations("universality", *h.hopf.pres, images, *a.pres, d);
}

} // namespace cosov
