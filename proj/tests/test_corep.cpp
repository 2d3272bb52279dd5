#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cosov/corep.hpp"

using namespace cosov;

namespace {
const FieldDesc Q = FieldDesc::rationals();

GenCharacter sweedler_phi() { return {{Scalar::from_int(Q, -1), Scalar::zero(Q)}}; }

// [[1, x], [0, g]] satisfies the column-convention corep invariant on the
// two-generator Sweedler presentation.
MatrixCorep sweedler_v2(const PresentedHopf& h) {
    NCPoly one = NCPoly::one(h.gens(), Q);
    NCPoly g = NCPoly::generator(h.gens(), Q, 0);
    NCPoly x = NCPoly::generator(h.gens(), Q, 1);
    return {2, {one, x, NCPoly::zero(h.gens(), Q), g}, "V2"};
}

MatrixCorep group_like_corep(const PresentedHopf& h, size_t gen, std::string label) {
    return {1, {NCPoly::generator(h.gens(), h.field(), gen)}, std::move(label)};
}
} // namespace

TEST_CASE("corep invariant: trivial, group-like and triangular examples") {
    PresentedHopf h = builtin_sweedler_presented();
    CHECK(check_corep(h, trivial_corep(h), 3).ok());
    CHECK(check_corep(h, group_like_corep(h, 0, "g"), 3).ok());
    CHECK(check_corep(h, sweedler_v2(h), 3).ok());

    // x alone is not a corep entry pattern: Delta(x) != x (x) x
    MatrixCorep bad{1, {NCPoly::generator(h.gens(), Q, 1)}, "x"};
    CHECK(check_corep(h, bad, 3).status == CheckStatus::fail);

    // wrong counit on the diagonal is an exact failure
    MatrixCorep scaled{1, {NCPoly::one(h.gens(), Q).scaled(Scalar::from_int(Q, 2))}, "2"};
    CHECK(check_corep(h, scaled, 3).status == CheckStatus::fail);
}

TEST_CASE("duals are coreps and dualization is an involution mod ideal") {
    PresentedHopf h = builtin_sweedler_presented();
    MatrixCorep v = sweedler_v2(h);
    MatrixCorep l = left_dual(h, v);
    MatrixCorep r = right_dual(h, v);
    CHECK(check_corep(h, l, 4).ok());
    CHECK(check_corep(h, r, 4).ok());

    MatrixCorep round = left_dual(h, right_dual(h, v));
    for (size_t i = 0; i < 2; ++i)
        for (size_t j = 0; j < 2; ++j)
            CHECK(check_ideal_equal("round", round.at(i, j), v.at(i, j), *h.pres, 4).ok());
}

TEST_CASE("tensor products and direct sums stay coreps") {
    PresentedHopf h = builtin_sweedler_presented();
    MatrixCorep v = sweedler_v2(h);
    MatrixCorep g = group_like_corep(h, 0, "g");
    CHECK(check_corep(h, tensor_corep(h, g, g), 4).ok());
    CHECK(check_corep(h, tensor_corep(h, v, g), 4).ok());
    CHECK(check_corep(h, direct_sum(h, v, g), 4).ok());
    CHECK(tensor_corep(h, v, g).size == 2);
    CHECK(direct_sum(h, v, g).size == 3);
}

TEST_CASE("dimension bookkeeping over the Sweedler character") {
    PresentedHopf h = builtin_sweedler_presented();
    GenCharacter phi = sweedler_phi();
    MatrixCorep v = sweedler_v2(h);

    DimensionPair dv = dims(h, v, phi);
    CHECK(dv.left.is_zero());
    CHECK(dv.right.is_zero());

    DimensionPair dg = dims(h, group_like_corep(h, 0, "g"), phi);
    CHECK(dg.left == Scalar::from_int(Q, -1));
    CHECK(dg.right == Scalar::from_int(Q, -1));

    std::vector<MatrixCorep> examples{trivial_corep(h), group_like_corep(h, 0, "g"), v};
    CHECK(check_dim_properties(h, examples, phi, 3).ok());
}

TEST_CASE("left and right dimensions can differ exactly") {
    PresentedHopf h = builtin_laurent();
    MatrixCorep t = generator_matrix_corep(h, {h.gens()->index("t")}, 1, "t");
    CHECK(check_corep(h, t, 3).ok());
    GenCharacter chi{{Scalar::from_int(Q, 2), Scalar::from_rational(Q, mpq_class(1, 2))}};
    DimensionPair d = dims(h, t, chi);
    CHECK(d.left == Scalar::from_int(Q, 2));
    CHECK(d.right == Scalar::from_rational(Q, mpq_class(1, 2)));
    CHECK_FALSE(d.left == d.right);
    CHECK(check_dim_properties(h, {t}, chi, 3).ok());
}

TEST_CASE("sovereign isomorphism matrix and intertwiner certification") {
    PresentedHopf h = builtin_sweedler_presented();
    MatrixCorep v = sweedler_v2(h);
    Matrix m = sovereign_iso(h, v, sweedler_phi(), 4);
    CHECK(m.at(0, 0).is_one());
    CHECK(m.at(1, 1) == Scalar::from_int(Q, -1));
    CHECK(m.at(0, 1).is_zero());
    (void)m.inverse(); // must be invertible

    // the counit is not sovereign on Sweedler: certified by the 2x2 refuter
    try {
        sovereign_iso(h, v, counit_character(h), 4);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == errc::intertwiner_check_failed);
    }
}

TEST_CASE("coreps linked by an invertible intertwiner share dimensions") {
    PresentedHopf h = builtin_sweedler_presented();
    GenCharacter phi = sweedler_phi();
    MatrixCorep g = group_like_corep(h, 0, "g");

    Matrix two(1, 1, Q);
    two.at(0, 0) = Scalar::from_int(Q, 2);
    CHECK(check_intertwined_dims(h, g, g, two, phi, 3).ok());

    Matrix one = Matrix::identity(1, Q);
    CheckResult mixed = check_intertwined_dims(h, g, trivial_corep(h), one, phi, 3);
    CHECK(mixed.status == CheckStatus::fail);

    Matrix zero(1, 1, Q);
    try {
        check_intertwined_dims(h, g, g, zero, phi, 3);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == errc::singular);
    }
}

TEST_CASE("shape and algebra mismatches are rejected") {
    PresentedHopf h = builtin_sweedler_presented();
    MatrixCorep short_entries{2, {NCPoly::one(h.gens(), Q)}, "bad"};
    try {
        check_corep(h, short_entries, 2);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == errc::dimension_mismatch);
    }

    PresentedHopf laurent = builtin_laurent();
    MatrixCorep foreign = trivial_corep(laurent);
    try {
        check_corep(h, foreign, 2);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == errc::algebra_mismatch);
    }

    PresentedHopf no_inv = builtin_sweedler_presented();
    no_inv.antipode_inv.reset();
    try {
        right_dual(no_inv, sweedler_v2(no_inv));
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == errc::missing_inverse);
    }
}

TEST_CASE("fd: the regular corep of Sweedler's algebra has dimensions (0, 0)") {
    FinHopf a = builtin_sweedler();
    FdMatrixCorep reg = regular_corep(a);
    CHECK(check_corep_fd(a, reg).ok());
    GenCharacter phi{{Scalar::one(Q), Scalar::from_int(Q, -1), Scalar::zero(Q), Scalar::zero(Q)}};
    DimensionPair d = dims_fd(a, reg, phi);
    CHECK(d.left.is_zero());
    CHECK(d.right.is_zero());

    FdMatrixCorep l = left_dual_fd(a, reg);
    FdMatrixCorep r = right_dual_fd(a, reg);
    CHECK(check_corep_fd(a, l).ok());
    CHECK(check_corep_fd(a, r).ok());
    DimensionPair dl = dims_fd(a, l, phi);
    CHECK(dl.left == d.right);
    CHECK(dl.right == d.left);
}

TEST_CASE("fd: group algebra regular corep has dimensions (m, m) under eps") {
    for (size_t m : {2u, 3u}) {
        FinHopf a = builtin_cyclic_group_algebra(m);
        FdMatrixCorep reg = regular_corep(a);
        CHECK(check_corep_fd(a, reg).ok());
        DimensionPair d = dims_fd(a, reg, counit_character_fd(a));
        CHECK(d.left == Scalar::from_int(Q, (long)m));
        CHECK(d.right == Scalar::from_int(Q, (long)m));
    }
}

TEST_CASE("fd: tensor coreps multiply dimensions") {
    FinHopf a = builtin_sweedler();
    GenCharacter phi{{Scalar::one(Q), Scalar::from_int(Q, -1), Scalar::zero(Q), Scalar::zero(Q)}};
    // the group-like g spans a one-dimensional corep
    FdMatrixCorep g{1,
                    {{Scalar::zero(Q), Scalar::one(Q), Scalar::zero(Q), Scalar::zero(Q)}},
                    "g"};
    CHECK(check_corep_fd(a, g).ok());
    FdMatrixCorep gg = tensor_corep_fd(a, g, g);
    CHECK(check_corep_fd(a, gg).ok());
    DimensionPair dg = dims_fd(a, g, phi);
    DimensionPair dgg = dims_fd(a, gg, phi);
    CHECK(dgg.left == dg.left * dg.left);
    CHECK(dgg.right == dg.right * dg.right);

    FdMatrixCorep reg = regular_corep(a);
    FdMatrixCorep mixed = tensor_corep_fd(a, reg, g);
    CHECK(check_corep_fd(a, mixed).ok());
    DimensionPair dm = dims_fd(a, mixed, phi);
    DimensionPair dr = dims_fd(a, reg, phi);
    CHECK(dm.left == dr.left * dg.left);
    CHECK(dm.right == dr.right * dg.right);
}
