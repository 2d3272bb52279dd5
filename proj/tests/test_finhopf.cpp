#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cosov/finhopf.hpp"

using namespace cosov;

namespace {
const FieldDesc Q = FieldDesc::rationals();

bool same_structure(const FinHopf& a, const FinHopf& b) {
    return a.dim == b.dim && a.field == b.field && a.mult == b.mult && a.unit == b.unit &&
           a.comult == b.comult && a.counit == b.counit && a.antipode == b.antipode;
}
} // namespace

TEST_CASE("group algebra k[Z/2] passes all verifiers") {
    FinHopf h = builtin_cyclic_group_algebra(2);
    CHECK(verify_algebra(h).all_pass());
    CHECK(verify_coalgebra(h).all_pass());
    CHECK(verify_bialgebra(h).all_pass());
    CHECK(verify_antipode(h).all_pass());
    CHECK(verify_fin_hopf(h).all_pass());
    CHECK(is_involutory(h));
}

TEST_CASE("Sweedler H4 passes all verifiers and is not involutory") {
    FinHopf h = builtin_sweedler();
    CHECK(h.dim == 4);
    Report r = verify_fin_hopf(h);
    for (const auto& c : r.checks) {
        INFO(c.name, ": ", c.detail);
        CHECK(c.ok());
    }
    CHECK_FALSE(is_involutory(h));
    // S^2(x) = -x, S^4 = id
    Matrix s2 = h.antipode * h.antipode;
    CHECK(s2.at(2, 2) == Scalar::from_int(Q, -1));
    CHECK((s2 * s2).is_identity());
}

TEST_CASE("corrupting a structure constant is caught") {
    FinHopf h = builtin_cyclic_group_algebra(2);
    h.m(1, 1, 0) = Scalar::from_int(Q, 2);
    Report r = verify_fin_hopf(h);
    CHECK(r.any_fail());
}

TEST_CASE("identity antipode on Sweedler H4 fails the axiom") {
    FinHopf h = builtin_sweedler();
    h.antipode = Matrix::identity(4, Q);
    h.antipode_inv.reset();
    CHECK(verify_bialgebra(h).all_pass());
    CHECK(verify_antipode(h).any_fail());
}

TEST_CASE("every single-entry mutation of a passing example is detected") {
    FinHopf base = builtin_sweedler();
    size_t n = base.dim;
    auto bump = [&](Scalar& s) { s += Scalar::one(Q); };
    for (size_t idx = 0; idx < n * n * n; ++idx) {
        FinHopf h = base;
        bump(h.mult[idx]);
        REQUIRE(verify_fin_hopf(h).any_fail());
    }
    for (size_t idx = 0; idx < n * n * n; ++idx) {
        FinHopf h = base;
        bump(h.comult[idx]);
        REQUIRE(verify_fin_hopf(h).any_fail());
    }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            FinHopf h = base;
            bump(h.antipode.at(i, j));
            REQUIRE(verify_fin_hopf(h).any_fail());
        }
}

TEST_CASE("cyclic group algebras") {
    FinHopf z3 = builtin_cyclic_group_algebra(3);
    CHECK(z3.dim == 3);
    CHECK(verify_fin_hopf(z3).all_pass());
    CHECK(is_involutory(z3));
}

TEST_CASE("broken tables are rejected") {
    // non-associative: tweak Z/3 table
    std::vector<std::vector<size_t>> t{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
    t[2][2] = 2;
    try {
        builtin_group_algebra(t);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == errc::not_a_group);
    }
    // no identity in slot 0
    std::vector<std::vector<size_t>> t2{{1, 0}, {0, 1}};
    CHECK_THROWS_AS(builtin_group_algebra(t2), Error);
}

TEST_CASE("dual Hopf algebra") {
    FinHopf z2 = builtin_cyclic_group_algebra(2);
    FinHopf d = dual_hopf(z2);
    CHECK(verify_fin_hopf(d).all_pass());
    CHECK(same_structure(dual_hopf(d), z2));

    FinHopf sw = builtin_sweedler();
    FinHopf dsw = dual_hopf(sw);
    CHECK(verify_fin_hopf(dsw).all_pass());
    CHECK(same_structure(dual_hopf(dsw), sw));
    CHECK_FALSE(is_involutory(dsw));
}

TEST_CASE("fd_mul follows the relations") {
    FinHopf h = builtin_sweedler();
    auto e = [&](size_t i) {
        std::vector<Scalar> v(4, Scalar::zero(Q));
        v[i] = Scalar::one(Q);
        return v;
    };
    // x * g = -gx
    auto xg = fd_mul(h, e(2), e(1));
    CHECK(xg[3] == Scalar::from_int(Q, -1));
    // x * x = 0
    auto xx = fd_mul(h, e(2), e(2));
    for (const auto& c : xx) CHECK(c.is_zero());
}

TEST_CASE("shape validation") {
    FinHopf h = builtin_sweedler();
    h.unit.pop_back();
    try {
        verify_algebra(h);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == errc::dimension_mismatch);
    }
}
