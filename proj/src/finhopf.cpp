#include "cosov/finhopf.hpp"

#include <sstream>

namespace cosov {

std::string FinHopf::basis_name(size_t i) const {
    if (i < basis_names.size()) return basis_names[i];
    return "e" + std::to_string(i);
}

void check_shapes(const FinHopf& a) {
    size_t n = a.dim;
    if (n == 0 || a.mult.size() != n * n * n || a.comult.size() != n * n * n ||
        a.unit.size() != n || a.counit.size() != n || a.antipode.rows() != n ||
        a.antipode.cols() != n)
        fail(errc::dimension_mismatch, "structure tensor shapes inconsistent with dim");
    if (a.antipode_inv && (a.antipode_inv->rows() != n || a.antipode_inv->cols() != n))
        fail(errc::dimension_mismatch, "antipode inverse shape mismatch");
}

std::vector<Scalar> fd_mul(const FinHopf& a, const std::vector<Scalar>& x,
                           const std::vector<Scalar>& y) {
    size_t n = a.dim;
    if (x.size() != n || y.size() != n) fail(errc::dimension_mismatch, "vector length != dim");
    std::vector<Scalar> out(n, Scalar::zero(a.field));
    for (size_t i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        for (size_t j = 0; j < n; ++j) {
            if (y[j].is_zero()) continue;
            Scalar c = x[i] * y[j];
            for (size_t k = 0; k < n; ++k) out[k] += c * a.m(i, j, k);
        }
    }
    return out;
}

namespace {

std::string witness(const FinHopf& a, std::initializer_list<size_t> idx) {
    std::ostringstream os;
    os << "basis witness (";
    bool first = true;
    for (size_t i : idx) {
        if (!first) os << ", ";
        first = false;
        os << a.basis_name(i);
    }
    os << ")";
    return os.str();
}

Scalar delta(const FinHopf& a, size_t i, size_t j) {
    return i == j ? Scalar::one(a.field) : Scalar::zero(a.field);
}

} // namespace

Report verify_algebra(const FinHopf& a) {
    check_shapes(a);
    Report rep;
    size_t n = a.dim;
    bool assoc = true;
    std::string w;
    for (size_t i = 0; i < n && assoc; ++i)
        for (size_t j = 0; j < n && assoc; ++j)
            for (size_t k = 0; k < n && assoc; ++k)
                for (size_t l = 0; l < n; ++l) {
                    Scalar lhs = Scalar::zero(a.field), rhs = Scalar::zero(a.field);
                    for (size_t p = 0; p < n; ++p) {
                        lhs += a.m(i, j, p) * a.m(p, k, l);
                        rhs += a.m(j, k, p) * a.m(i, p, l);
                    }
                    if (!(lhs == rhs)) {
                        assoc = false;
                        w = witness(a, {i, j, k});
                        break;
                    }
                }
    rep.add(assoc ? CheckResult::pass("algebra.associativity")
                  : CheckResult::fail("algebra.associativity", w));

    bool unit_ok = true;
    for (size_t j = 0; j < n && unit_ok; ++j)
        for (size_t k = 0; k < n; ++k) {
            Scalar left = Scalar::zero(a.field), right = Scalar::zero(a.field);
            for (size_t i = 0; i < n; ++i) {
                left += a.unit[i] * a.m(i, j, k);
                right += a.unit[i] * a.m(j, i, k);
            }
            if (!(left == delta(a, j, k)) || !(right == delta(a, j, k))) {
                unit_ok = false;
                w = witness(a, {j});
                break;
            }
        }
    rep.add(unit_ok ? CheckResult::pass("algebra.unit") : CheckResult::fail("algebra.unit", w));
    return rep;
}

Report verify_coalgebra(const FinHopf& a) {
    check_shapes(a);
    Report rep;
    size_t n = a.dim;
    bool coassoc = true;
    std::string w;
    for (size_t i = 0; i < n && coassoc; ++i)
        for (size_t x = 0; x < n && coassoc; ++x)
            for (size_t y = 0; y < n && coassoc; ++y)
                for (size_t z = 0; z < n; ++z) {
                    Scalar lhs = Scalar::zero(a.field), rhs = Scalar::zero(a.field);
                    for (size_t p = 0; p < n; ++p) {
                        lhs += a.d(i, p, z) * a.d(p, x, y);
                        rhs += a.d(i, x, p) * a.d(p, y, z);
                    }
                    if (!(lhs == rhs)) {
                        coassoc = false;
                        w = witness(a, {i});
                        break;
                    }
                }
    rep.add(coassoc ? CheckResult::pass("coalgebra.coassociativity")
                    : CheckResult::fail("coalgebra.coassociativity", w));

    bool counit_ok = true;
    for (size_t i = 0; i < n && counit_ok; ++i)
        for (size_t k = 0; k < n; ++k) {
            Scalar left = Scalar::zero(a.field), right = Scalar::zero(a.field);
            for (size_t j = 0; j < n; ++j) {
                left += a.d(i, j, k) * a.counit[j];
                right += a.d(i, k, j) * a.counit[j];
            }
            if (!(left == delta(a, i, k)) || !(right == delta(a, i, k))) {
                counit_ok = false;
                w = witness(a, {i});
                break;
            }
        }
    rep.add(counit_ok ? CheckResult::pass("coalgebra.counit")
                      : CheckResult::fail("coalgebra.counit", w));
    return rep;
}

Report verify_bialgebra(const FinHopf& a) {
    Report rep = verify_algebra(a);
    rep.merge(verify_coalgebra(a));
    size_t n = a.dim;

    bool comult_mult = true;
    std::string w;
    for (size_t i = 0; i < n && comult_mult; ++i)
        for (size_t j = 0; j < n && comult_mult; ++j)
            for (size_t x = 0; x < n && comult_mult; ++x)
                for (size_t y = 0; y < n; ++y) {
                    Scalar lhs = Scalar::zero(a.field);
                    for (size_t p = 0; p < n; ++p) lhs += a.m(i, j, p) * a.d(p, x, y);
                    Scalar rhs = Scalar::zero(a.field);
                    for (size_t a1 = 0; a1 < n; ++a1)
                        for (size_t b1 = 0; b1 < n; ++b1) {
                            if (a.d(i, a1, b1).is_zero()) continue;
                            for (size_t a2 = 0; a2 < n; ++a2)
                                for (size_t b2 = 0; b2 < n; ++b2)
                                    rhs += a.d(i, a1, b1) * a.d(j, a2, b2) * a.m(a1, a2, x) *
                                           a.m(b1, b2, y);
                        }
                    if (!(lhs == rhs)) {
                        comult_mult = false;
                        w = witness(a, {i, j});
                        break;
                    }
                }
    rep.add(comult_mult ? CheckResult::pass("bialgebra.comult_multiplicative")
                        : CheckResult::fail("bialgebra.comult_multiplicative", w));

    bool counit_mult = true;
    for (size_t i = 0; i < n && counit_mult; ++i)
        for (size_t j = 0; j < n; ++j) {
            Scalar lhs = Scalar::zero(a.field);
            for (size_t p = 0; p < n; ++p) lhs += a.m(i, j, p) * a.counit[p];
            if (!(lhs == a.counit[i] * a.counit[j])) {
                counit_mult = false;
                w = witness(a, {i, j});
                break;
            }
        }
    rep.add(counit_mult ? CheckResult::pass("bialgebra.counit_multiplicative")
                        : CheckResult::fail("bialgebra.counit_multiplicative", w));

    bool unit_ok = true;
    Scalar eps_one = Scalar::zero(a.field);
    for (size_t i = 0; i < n; ++i) eps_one += a.unit[i] * a.counit[i];
    for (size_t x = 0; x < n && unit_ok; ++x)
        for (size_t y = 0; y < n; ++y) {
            Scalar lhs = Scalar::zero(a.field);
            for (size_t i = 0; i < n; ++i) lhs += a.unit[i] * a.d(i, x, y);
            if (!(lhs == a.unit[x] * a.unit[y])) {
                unit_ok = false;
                break;
            }
        }
    rep.add(unit_ok && eps_one.is_one()
                ? CheckResult::pass("bialgebra.unit_counit_compatibility")
                : CheckResult::fail("bialgebra.unit_counit_compatibility"));
    return rep;
}

Report verify_antipode(const FinHopf& a) {
    check_shapes(a);
    Report rep;
    size_t n = a.dim;
    bool ok = true;
    std::string w;
    for (size_t i = 0; i < n && ok; ++i) {
        for (size_t l = 0; l < n; ++l) {
            Scalar left = Scalar::zero(a.field), right = Scalar::zero(a.field);
            for (size_t x = 0; x < n; ++x)
                for (size_t y = 0; y < n; ++y) {
                    if (a.d(i, x, y).is_zero()) continue;
                    for (size_t c = 0; c < n; ++c) {
                        left += a.d(i, x, y) * a.antipode.at(c, x) * a.m(c, y, l);
                        right += a.d(i, x, y) * a.antipode.at(c, y) * a.m(x, c, l);
                    }
                }
            Scalar expected = a.counit[i] * a.unit[l];
            if (!(left == expected) || !(right == expected)) {
                ok = false;
                w = witness(a, {i});
                break;
            }
        }
    }
    rep.add(ok ? CheckResult::pass("hopf.antipode_axiom")
               : CheckResult::fail("hopf.antipode_axiom", w));
    return rep;
}

Report verify_fin_hopf(const FinHopf& a) {
    Report rep = verify_bialgebra(a);
    rep.merge(verify_antipode(a));
    if (a.antipode_inv) {
        bool ok = (a.antipode * *a.antipode_inv).is_identity() &&
                  (*a.antipode_inv * a.antipode).is_identity();
        rep.add(ok ? CheckResult::pass("hopf.antipode_inverse")
                   : CheckResult::fail("hopf.antipode_inverse"));
    }
    return rep;
}

bool is_involutory(const FinHopf& a) {
    check_shapes(a);
    return (a.antipode * a.antipode).is_identity();
}

FinHopf dual_hopf(const FinHopf& a) {
    check_shapes(a);
    FinHopf b;
    b.dim = a.dim;
    b.field = a.field;
    size_t n = a.dim;
    b.mult.assign(n * n * n, Scalar::zero(a.field));
    b.comult.assign(n * n * n, Scalar::zero(a.field));
    b.unit = a.counit;
    b.counit = a.unit;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k) {
                b.m(i, j, k) = a.d(k, i, j);
                b.d(i, j, k) = a.m(j, k, i);
            }
    b.antipode = a.antipode.transpose();
    if (a.antipode_inv) b.antipode_inv = a.antipode_inv->transpose();
    for (size_t i = 0; i < n; ++i) b.basis_names.push_back(a.basis_name(i) + "^*");
    return b;
}

FinHopf builtin_sweedler() {
    const FieldDesc Q = FieldDesc::rationals();
    FinHopf h;
    h.dim = 4;
    h.field = Q;
    h.basis_names = {"1", "g", "x", "gx"};
    size_t n = 4;
    h.mult.assign(n * n * n, Scalar::zero(Q));
    h.comult.assign(n * n * n, Scalar::zero(Q));
    h.unit.assign(n, Scalar::zero(Q));
    h.counit.assign(n, Scalar::zero(Q));
    auto setm = [&](size_t i, size_t j, size_t k, long c) { h.m(i, j, k) = Scalar::from_int(Q, c); };
    auto setd = [&](size_t i, size_t j, size_t k, long c) { h.d(i, j, k) = Scalar::from_int(Q, c); };
    // basis: 0 = 1, 1 = g, 2 = x, 3 = gx; relations g^2 = 1, x^2 = 0, xg = -gx
    for (size_t j = 0; j < n; ++j) {
        setm(0, j, j, 1);
        if (j) setm(j, 0, j, 1);
    }
    setm(1, 1, 0, 1);  // g*g = 1
    setm(1, 2, 3, 1);  // g*x = gx
    setm(1, 3, 2, 1);  // g*gx = x
    setm(2, 1, 3, -1); // x*g = -gx
    setm(3, 1, 2, -1); // gx*g = -x
    // x*x = x*gx = gx*x = gx*gx = 0
    h.unit[0] = Scalar::one(Q);
    setd(0, 0, 0, 1);            // Delta(1) = 1 (x) 1
    setd(1, 1, 1, 1);            // Delta(g) = g (x) g
    setd(2, 0, 2, 1);            // Delta(x) = 1 (x) x + x (x) g
    setd(2, 2, 1, 1);
    setd(3, 1, 3, 1);            // Delta(gx) = g (x) gx + gx (x) 1
    setd(3, 3, 0, 1);
    h.counit[0] = Scalar::one(Q);
    h.counit[1] = Scalar::one(Q);
    // S(1) = 1, S(g) = g, S(x) = gx, S(gx) = -x
    Matrix s(n, n, Q);
    s.at(0, 0) = Scalar::one(Q);
    s.at(1, 1) = Scalar::one(Q);
    s.at(3, 2) = Scalar::one(Q);
    s.at(2, 3) = Scalar::from_int(Q, -1);
    h.antipode = s;
    h.antipode_inv = s.inverse();
    return h;
}

FinHopf builtin_group_algebra(const std::vector<std::vector<size_t>>& table) {
    size_t n = table.size();
    if (n == 0) fail(errc::not_a_group, "empty multiplication table");
    for (const auto& row : table) {
        if (row.size() != n) fail(errc::not_a_group, "multiplication table is not square");
        for (size_t v : row)
            if (v >= n) fail(errc::not_a_group, "table entry out of range");
    }
    for (size_t i = 0; i < n; ++i)
        if (table[0][i] != i || table[i][0] != i)
            fail(errc::not_a_group, "element 0 is not a two-sided identity");
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k)
                if (table[table[i][j]][k] != table[i][table[j][k]])
                    fail(errc::not_a_group, "multiplication table is not associative");
    std::vector<size_t> inv(n, n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j)
            if (table[i][j] == 0 && table[j][i] == 0) {
                inv[i] = j;
                break;
            }
        if (inv[i] == n) fail(errc::not_a_group, "element without a two-sided inverse");
    }

    const FieldDesc Q = FieldDesc::rationals();
    FinHopf h;
    h.dim = n;
    h.field = Q;
    h.mult.assign(n * n * n, Scalar::zero(Q));
    h.comult.assign(n * n * n, Scalar::zero(Q));
    h.unit.assign(n, Scalar::zero(Q));
    h.counit.assign(n, Scalar::one(Q));
    h.unit[0] = Scalar::one(Q);
    Matrix s(n, n, Q);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) h.m(i, j, table[i][j]) = Scalar::one(Q);
        h.d(i, i, i) = Scalar::one(Q);
        s.at(inv[i], i) = Scalar::one(Q);
        h.basis_names.push_back("g" + std::to_string(i));
    }
    h.antipode = s;
    h.antipode_inv = s; // group inversion is an involution
    return h;
}

FinHopf builtin_cyclic_group_algebra(size_t m) {
    std::vector<std::vector<size_t>> table(m, std::vector<size_t>(m));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) table[i][j] = (i + j) % m;
    return builtin_group_algebra(table);
}

} // namespace cosov
