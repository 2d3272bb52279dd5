#include "cosov/sle.hpp"

namespace cosov {

namespace {

size_t ipow(size_t b, size_t e) {
    size_t r = 1;
    while (e--) r *= b;
    return r;
}

/// Iterate all multi-indices in [0,n)^len, last position fastest.
bool advance(std::vector<size_t>& idx, size_t n) {
    for (size_t k = idx.size(); k-- > 0;) {
        if (++idx[k] < n) return true;
        idx[k] = 0;
    }
    return false;
}

size_t rank_of(Matrix m) {
    size_t r = 0;
    for (size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
        size_t pivot = r;
        while (pivot < m.rows() && m.at(pivot, col).is_zero()) ++pivot;
        if (pivot == m.rows()) continue;
        for (size_t j = 0; j < m.cols(); ++j) std::swap(m.at(r, j), m.at(pivot, j));
        Scalar inv = m.at(r, col).inverse();
        for (size_t j = col; j < m.cols(); ++j) m.at(r, j) *= inv;
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, col).is_zero()) continue;
            Scalar f = m.at(i, col);
            for (size_t j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        ++r;
    }
    return r;
}

void check_etensor(const ETensor& e) {
    if (e.n == 0 || e.N < 1 || e.values.size() != ipow(e.n, e.N))
        fail(errc::dimension_mismatch, "tensor value count != n^N");
    for (const auto& v : e.values)
        if (!v.is_zero()) return;
    fail(errc::invalid_argument, "the tensor is identically zero");
}

} // namespace

size_t ETensor::flat(const std::vector<size_t>& idx) const {
    size_t f = 0;
    for (size_t v : idx) f = f * n + v;
    return f;
}

Nondegeneracy check_nondegenerate(const ETensor& e) {
    check_etensor(e);
    size_t rows = ipow(e.n, e.N - 1);
    Matrix left(rows, e.n, e.field), right(rows, e.n, e.field);
    std::vector<size_t> j(e.N - 1, 0);
    size_t r = 0;
    do {
        std::vector<size_t> full(e.N);
        for (size_t k = 0; k < e.n; ++k) {
            std::copy(j.begin(), j.end(), full.begin());
            full[e.N - 1] = k;
            left.at(r, k) = e.at(full);
            full[0] = k;
            std::copy(j.begin(), j.end(), full.begin() + 1);
            right.at(r, k) = e.at(full);
        }
        ++r;
    } while (advance(j, e.n));
    return {rank_of(left) == e.n, rank_of(right) == e.n};
}

std::vector<Scalar> solve_star(const ETensor& e) {
    check_etensor(e);
    size_t m = ipow(e.n, e.N - 1);
    Matrix a(e.n, m, e.field);
    std::vector<size_t> j(e.N - 1, 0);
    size_t col = 0;
    do {
        std::vector<size_t> full(e.N);
        std::copy(j.begin(), j.end(), full.begin());
        for (size_t k = 0; k < e.n; ++k) {
            full[e.N - 1] = k;
            a.at(k, col) = e.at(full);
        }
        ++col;
    } while (advance(j, e.n));

    std::vector<Scalar> lambda(e.n * m, Scalar::zero(e.field));
    for (size_t i = 0; i < e.n; ++i) {
        Matrix b(e.n, 1, e.field);
        b.at(i, 0) = Scalar::one(e.field);
        SolutionSpace s = solve_linear(a, b); // throws errc::inconsistent
        for (size_t t = 0; t < m; ++t) lambda[i * m + t] = s.particular.at(t, 0);
    }
    return lambda;
}

std::vector<Scalar> solve_starstar(const ETensor& e) {
    check_etensor(e);
    size_t m = ipow(e.n, e.N - 1);
    Matrix a(e.n, m, e.field);
    std::vector<size_t> j(e.N - 1, 0);
    size_t col = 0;
    do {
        std::vector<size_t> full(e.N);
        std::copy(j.begin(), j.end(), full.begin() + 1);
        for (size_t k = 0; k < e.n; ++k) {
            full[0] = k;
            a.at(k, col) = e.at(full);
        }
        ++col;
    } while (advance(j, e.n));

    std::vector<Scalar> mu(m * e.n, Scalar::zero(e.field));
    for (size_t i = 0; i < e.n; ++i) {
        Matrix b(e.n, 1, e.field);
        b.at(i, 0) = Scalar::one(e.field);
        SolutionSpace s = solve_linear(a, b);
        for (size_t t = 0; t < m; ++t) mu[t * e.n + i] = s.particular.at(t, 0);
    }
    return mu;
}

SLEAlgebra build_SLE(const ETensor& e) {
    check_etensor(e);
    Nondegeneracy nd = check_nondegenerate(e);
    if (!nd.left || !nd.right) fail(errc::degenerate, "E must be left and right nondegenerate");

    SLEAlgebra A;
    A.E = e;
    // Prefer the proportional solution lambda(i,J) = E(i,J)/d_i,
    // mu(J,i) = E(J,i)/d_i with d_i = sum_J E(i,J)E(J,i): when it satisfies
    // (*) and (**) it aligns the antipode with both relation families, so the
    // matrix-inverse identities certify at low degree. Fall back to the
    // deterministic linear solve otherwise.
    bool proportional = false;
    {
        size_t mm = ipow(e.n, e.N - 1);
        std::vector<Scalar> lam(e.n * mm, Scalar::zero(e.field));
        std::vector<Scalar> mu(mm * e.n, Scalar::zero(e.field));
        bool usable = true;
        for (size_t i = 0; i < e.n && usable; ++i) {
            Scalar di = Scalar::zero(e.field);
            std::vector<size_t> J(e.N - 1, 0);
            do {
                std::vector<size_t> iJ(e.N), Ji(e.N);
                iJ[0] = i;
                std::copy(J.begin(), J.end(), iJ.begin() + 1);
                std::copy(J.begin(), J.end(), Ji.begin());
                Ji[e.N - 1] = i;
                di += e.at(iJ) * e.at(Ji);
            } while (advance(J, e.n));
            if (di.is_zero()) {
                usable = false;
                break;
            }
            Scalar inv = di.inverse();
            std::fill(J.begin(), J.end(), 0);
            do {
                std::vector<size_t> iJ(e.N), Ji(e.N);
                iJ[0] = i;
                std::copy(J.begin(), J.end(), iJ.begin() + 1);
                std::copy(J.begin(), J.end(), Ji.begin());
                Ji[e.N - 1] = i;
                lam[i * mm + e.flat(J)] = e.at(iJ) * inv;
                mu[e.flat(J) * e.n + i] = e.at(Ji) * inv;
            } while (advance(J, e.n));
        }
        if (usable) {
            // exact substitution check of (*) and (**)
            for (size_t i = 0; i < e.n && usable; ++i)
                for (size_t k = 0; k < e.n && usable; ++k) {
                    Scalar s1 = Scalar::zero(e.field), s2 = Scalar::zero(e.field);
                    std::vector<size_t> J(e.N - 1, 0);
                    do {
                        std::vector<size_t> Jk(e.N), kJ(e.N);
                        std::copy(J.begin(), J.end(), Jk.begin());
                        Jk[e.N - 1] = k;
                        kJ[0] = k;
                        std::copy(J.begin(), J.end(), kJ.begin() + 1);
                        s1 += lam[i * mm + e.flat(J)] * e.at(Jk);
                        s2 += e.at(kJ) * mu[e.flat(J) * e.n + i];
                    } while (advance(J, e.n));
                    Scalar expected = i == k ? Scalar::one(e.field) : Scalar::zero(e.field);
                    usable = s1 == expected && s2 == expected;
                }
        }
        if (usable) {
            A.lambda = std::move(lam);
            A.mu = std::move(mu);
            proportional = true;
        }
    }
    if (!proportional) {
        A.lambda = solve_star(e);
        A.mu = solve_starstar(e);
    }

    const FieldDesc& f = e.field;
    size_t n = e.n, N = e.N, m = ipow(n, N - 1);
    std::vector<std::string> names;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            names.push_back("a" + std::to_string(i + 1) + std::to_string(j + 1));
    GenSetPtr gens = std::make_shared<const GenSet>(names);
    auto aij = [&](size_t i, size_t j) { return (uint16_t)(i * n + j); };

    // relation families: rows sum_j E(j) a_{j1 i1}..a_{jN iN} = E(i) and
    // columns sum_j E(j) a_{i1 j1}..a_{iN jN} = E(i)
    std::vector<NCPoly> relations;
    for (int family = 0; family < 2; ++family) {
        std::vector<size_t> i(N, 0);
        do {
            NCPoly r(gens, f);
            std::vector<size_t> j(N, 0);
            do {
                const Scalar& c = e.at(j);
                if (c.is_zero()) continue;
                Word w(N);
                for (size_t k = 0; k < N; ++k)
                    w[k] = family == 0 ? aij(j[k], i[k]) : aij(i[k], j[k]);
                r.add_term(w, c);
            } while (advance(j, n));
            r.add_term({}, -e.at(i));
            if (!r.is_zero()) relations.push_back(r);
        } while (advance(i, n));
    }
    auto pres = std::make_shared<Presentation>(gens, f, std::move(relations));

    A.hopf.pres = pres;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            TensorPoly c(gens, f);
            for (size_t k = 0; k < n; ++k)
                c = c + TensorPoly::tensor(NCPoly::generator(gens, f, aij(i, k)),
                                           NCPoly::generator(gens, f, aij(k, j)));
            A.hopf.comult.push_back(c);
            A.hopf.counit.push_back(i == j ? Scalar::one(f) : Scalar::zero(f));
        }

    // S(a_kj) = sum lambda(k,I) E(J,j) a_{J1 I1}..a_{J_{N-1} I_{N-1}}
    // S^{-1}(a_ij) = sum mu(I,i) E(j,J) a_{J1 I1}..a_{J_{N-1} I_{N-1}}
    std::vector<NCPoly> sinv;
    for (size_t k = 0; k < n; ++k)
        for (size_t j = 0; j < n; ++j) {
            NCPoly s(gens, f), si(gens, f);
            std::vector<size_t> I(N - 1, 0);
            do {
                const Scalar& lam = A.lambda[k * m + e.flat(I)];
                const Scalar& muv = A.mu[e.flat(I) * n + k];
                if (lam.is_zero() && muv.is_zero()) continue;
                std::vector<size_t> J(N - 1, 0);
                do {
                    Word w(N - 1);
                    for (size_t t = 0; t < N - 1; ++t) w[t] = aij(J[t], I[t]);
                    std::vector<size_t> fullS(N), fullSi(N);
                    std::copy(J.begin(), J.end(), fullS.begin());
                    fullS[N - 1] = j;
                    fullSi[0] = j;
                    std::copy(J.begin(), J.end(), fullSi.begin() + 1);
                    if (!lam.is_zero() && !e.at(fullS).is_zero())
                        s.add_term(w, lam * e.at(fullS));
                    if (!muv.is_zero() && !e.at(fullSi).is_zero())
                        si.add_term(w, muv * e.at(fullSi));
                } while (advance(J, n));
            } while (advance(I, n));
            A.hopf.antipode.push_back(s);
            if (!A.hopf.antipode_inv) A.hopf.antipode_inv.emplace();
            A.hopf.antipode_inv->push_back(si);
        }

    std::vector<size_t> gidx;
    for (size_t t = 0; t < n * n; ++t) gidx.push_back(t);
    A.corep_a = generator_matrix_corep(A.hopf, gidx, n, "a");

    A.beta = find_beta(e);
    if (A.beta) {
        GenCharacter phi{std::vector<Scalar>(n * n, Scalar::zero(f))};
        for (size_t i = 0; i < n; ++i) phi.values[i * n + i] = (*A.beta)[i];
        A.phi_beta = phi;
    }

    // refuting characters: the counit, and Phi_beta when available
    {
        MatrixRep eps;
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                Matrix im(1, 1, f);
                im.at(0, 0) = i == j ? Scalar::one(f) : Scalar::zero(f);
                eps.images.push_back(im);
            }
        pres->attach_refuter(eps);
        if (A.phi_beta) {
            MatrixRep rep;
            for (const Scalar& v : A.phi_beta->values) {
                Matrix im(1, 1, f);
                im.at(0, 0) = v;
                rep.images.push_back(im);
            }
            pres->attach_refuter(rep);
        }
    }
    A.hopf.notes.push_back(proportional
                               ? "antipode coefficients from the proportional lambda/mu solution"
                               : "antipode coefficients from the deterministic linear solve");
    if (N < 2)
        A.hopf.notes.push_back("arity N < 2 is outside the stated nondegeneracy hypotheses");
    return A;
}

std::optional<std::vector<Scalar>> find_beta(const ETensor& e) {
    check_etensor(e);
    std::vector<Scalar> beta;
    for (size_t i = 0; i < e.n; ++i) {
        std::optional<Scalar> bi;
        std::vector<size_t> J(e.N - 1, 0);
        // first pass: determine beta_i from some E(i,J) != 0
        do {
            std::vector<size_t> iJ(e.N), Ji(e.N);
            iJ[0] = i;
            std::copy(J.begin(), J.end(), iJ.begin() + 1);
            std::copy(J.begin(), J.end(), Ji.begin());
            Ji[e.N - 1] = i;
            const Scalar& lhs = e.at(Ji); // E(J, i)
            const Scalar& rhs = e.at(iJ); // E(i, J)
            if (!rhs.is_zero()) {
                Scalar candidate = lhs / rhs;
                if (bi && !(*bi == candidate)) return std::nullopt;
                bi = candidate;
            } else if (!lhs.is_zero()) {
                return std::nullopt; // proportionality impossible
            }
        } while (advance(J, e.n));
        if (!bi || bi->is_zero()) return std::nullopt;
        beta.push_back(*bi);
    }
    return beta;
}

CheckResult sovereign_char_beta(const SLEAlgebra& a, int d) {
    if (!a.phi_beta) fail(errc::beta_missing, "no beta vector was found for this tensor");
    CheckResult chr = check_character(a.hopf, *a.phi_beta);
    if (!chr.ok()) return CheckResult::fail("sovereign_char_beta", chr.detail);
    CheckResult sov = verify_sovereign_pres(a.hopf, *a.phi_beta, d);
    sov.name = "sovereign_char_beta";
    return sov;
}

ETensor build_Eq(size_t n) {
    if (n < 2) fail(errc::invalid_argument, "build_Eq needs n >= 2");
    ETensor e;
    e.n = n;
    e.N = n;
    e.field = FieldDesc::rational_functions("q");
    e.values.assign(ipow(n, n), Scalar::zero(e.field));
    Scalar mq = -Scalar::variable(e.field);
    std::vector<size_t> idx(n, 0);
    do {
        bool repeated = false;
        for (size_t i = 0; i < n && !repeated; ++i)
            for (size_t j = i + 1; j < n; ++j)
                if (idx[i] == idx[j]) { repeated = true; break; }
        if (repeated) continue;
        size_t inv = 0;
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j)
                if (idx[i] > idx[j]) ++inv;
        Scalar v = Scalar::one(e.field);
        for (size_t t = 0; t < inv; ++t) v *= mq;
        e.at(idx) = v;
    } while (advance(idx, n));
    return e;
}

} // namespace cosov
