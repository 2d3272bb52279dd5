#include "cosov/corep.hpp"

namespace cosov {

namespace {

void require_square(const MatrixCorep& v) {
    if (v.size == 0 || v.entries.size() != v.size * v.size)
        fail(errc::dimension_mismatch, "corep entry count != size^2");
}

void require_same_algebra(const PresentedHopf& h, const MatrixCorep& v) {
    require_square(v);
    for (const auto& e : v.entries)
        if (!(*e.gens() == *h.gens()) || !(e.field() == h.field()))
            fail(errc::algebra_mismatch, "corep entries over a different algebra");
}

} // namespace

CheckResult check_corep(const PresentedHopf& h, const MatrixCorep& v, int d) {
    require_same_algebra(h, v);
    CheckResult out = CheckResult::pass("corep_invariant", "", d);
    size_t n = v.size;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            TensorPoly t = extend_comult(h, v.at(i, j));
            for (size_t k = 0; k < n; ++k) t = t - TensorPoly::tensor(v.at(i, k), v.at(k, j));
            CheckResult c = check_tensor_ideal_zero("corep_invariant", t, *h.pres, d);
            if (!c.ok() && out.ok())
                out.detail = "comultiplication mismatch at (" + std::to_string(i) + "," +
                             std::to_string(j) + ")";
            out.status = combine(out.status, c.status);
            out.degree = std::max(out.degree, c.degree);

            Scalar eps = extend_counit(h, v.at(i, j));
            Scalar expected = i == j ? Scalar::one(h.field()) : Scalar::zero(h.field());
            if (!(eps == expected)) {
                if (out.ok())
                    out.detail = "counit mismatch at (" + std::to_string(i) + "," +
                                 std::to_string(j) + ")";
                out.status = CheckStatus::fail;
            }
        }
    return out;
}

MatrixCorep trivial_corep(const PresentedHopf& h) {
    return {1, {NCPoly::one(h.gens(), h.field())}, "1"};
}

MatrixCorep generator_matrix_corep(const PresentedHopf& h, const std::vector<size_t>& gen_indices,
                                   size_t n, std::string label) {
    if (gen_indices.size() != n * n) fail(errc::dimension_mismatch, "need n^2 generator indices");
    MatrixCorep v;
    v.size = n;
    v.label = std::move(label);
    for (size_t idx : gen_indices)
        v.entries.push_back(NCPoly::generator(h.gens(), h.field(), idx));
    return v;
}

MatrixCorep left_dual(const PresentedHopf& h, const MatrixCorep& v) {
    require_same_algebra(h, v);
    MatrixCorep out;
    out.size = v.size;
    out.label = v.label + "^lv";
    out.entries.assign(v.size * v.size, NCPoly::zero(h.gens(), h.field()));
    for (size_t i = 0; i < v.size; ++i)
        for (size_t j = 0; j < v.size; ++j) out.at(i, j) = extend_antipode(h, v.at(j, i));
    return out;
}

MatrixCorep right_dual(const PresentedHopf& h, const MatrixCorep& v) {
    require_same_algebra(h, v);
    if (!h.antipode_inv) fail(errc::missing_inverse, "right dual needs the antipode inverse");
    MatrixCorep out;
    out.size = v.size;
    out.label = v.label + "^rv";
    out.entries.assign(v.size * v.size, NCPoly::zero(h.gens(), h.field()));
    for (size_t i = 0; i < v.size; ++i)
        for (size_t j = 0; j < v.size; ++j) out.at(i, j) = extend_antipode_inv(h, v.at(j, i));
    return out;
}

MatrixCorep tensor_corep(const PresentedHopf& h, const MatrixCorep& v, const MatrixCorep& w) {
    require_same_algebra(h, v);
    require_same_algebra(h, w);
    MatrixCorep out;
    out.size = v.size * w.size;
    out.label = v.label + "(x)" + w.label;
    out.entries.assign(out.size * out.size, NCPoly::zero(h.gens(), h.field()));
    for (size_t i = 0; i < v.size; ++i)
        for (size_t j = 0; j < w.size; ++j)
            for (size_t k = 0; k < v.size; ++k)
                for (size_t l = 0; l < w.size; ++l)
                    out.at(i * w.size + j, k * w.size + l) = v.at(i, k) * w.at(j, l);
    return out;
}

MatrixCorep direct_sum(const PresentedHopf& h, const MatrixCorep& v, const MatrixCorep& w) {
    require_same_algebra(h, v);
    require_same_algebra(h, w);
    MatrixCorep out;
    out.size = v.size + w.size;
    out.label = v.label + "(+)" + w.label;
    out.entries.assign(out.size * out.size, NCPoly::zero(h.gens(), h.field()));
    for (size_t i = 0; i < v.size; ++i)
        for (size_t j = 0; j < v.size; ++j) out.at(i, j) = v.at(i, j);
    for (size_t i = 0; i < w.size; ++i)
        for (size_t j = 0; j < w.size; ++j) out.at(v.size + i, v.size + j) = w.at(i, j);
    return out;
}

Matrix sovereign_iso(const PresentedHopf& h, const MatrixCorep& v, const GenCharacter& phi,
                     int d) {
    require_same_algebra(h, v);
    if (!h.antipode_inv) fail(errc::missing_inverse, "intertwiner check needs antipode inverse");
    size_t n = v.size;
    Matrix m(n, n, h.field());
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) m.at(i, j) = char_eval(phi, h.field(), v.at(i, j));
    // phi * S = S^{-1} * phi entrywise on the coaction matrix
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            NCPoly lhs(h.gens(), h.field()), rhs(h.gens(), h.field());
            for (size_t k = 0; k < n; ++k) {
                lhs += extend_antipode_inv(h, v.at(i, k)).scaled(m.at(k, j));
                rhs += extend_antipode(h, v.at(k, j)).scaled(m.at(i, k));
            }
            CheckResult c = check_ideal_equal("intertwiner", lhs, rhs, *h.pres, d);
            if (c.status == CheckStatus::fail)
                fail(errc::intertwiner_check_failed,
                     "sovereign intertwiner condition fails at (" + std::to_string(i) + "," +
                         std::to_string(j) + ")");
        }
    return m;
}

DimensionPair dims(const PresentedHopf& h, const MatrixCorep& v, const GenCharacter& phi) {
    require_same_algebra(h, v);
    Scalar l = Scalar::zero(h.field()), r = Scalar::zero(h.field());
    for (size_t i = 0; i < v.size; ++i) {
        l += char_eval(phi, h.field(), v.at(i, i));
        r += char_eval(phi, h.field(), extend_antipode(h, v.at(i, i)));
    }
    return {l, r};
}

CheckResult check_dim_properties(const PresentedHopf& h, const std::vector<MatrixCorep>& examples,
                                 const GenCharacter& phi, int d) {
    CheckResult out = CheckResult::pass("dimension_properties", "", d);
    auto fold = [&](bool ok, const std::string& what) {
        if (!ok) {
            if (out.ok()) out.detail = what;
            out.status = CheckStatus::fail;
        }
    };

    DimensionPair unit = dims(h, trivial_corep(h), phi);
    fold(unit.left.is_one() && unit.right.is_one(), "unit corep dims are not (1,1)");

    for (const auto& v : examples) {
        CheckResult inv = check_corep(h, v, d);
        out.status = combine(out.status, inv.status);
        if (!inv.ok() && out.detail.empty()) out.detail = v.label + ": " + inv.detail;

        DimensionPair dv = dims(h, v, phi);
        DimensionPair dl = dims(h, left_dual(h, v), phi);
        fold(dl.left == dv.right && dl.right == dv.left,
             v.label + ": dual does not swap dimensions");
        if (h.antipode_inv) {
            DimensionPair dr = dims(h, right_dual(h, v), phi);
            fold(dr.left == dv.right && dr.right == dv.left,
                 v.label + ": right dual does not swap dimensions");
        }
    }
    for (const auto& v : examples)
        for (const auto& w : examples) {
            DimensionPair dv = dims(h, v, phi);
            DimensionPair dw = dims(h, w, phi);
            DimensionPair dt = dims(h, tensor_corep(h, v, w), phi);
            fold(dt.left == dv.left * dw.left && dt.right == dv.right * dw.right,
                 v.label + "(x)" + w.label + ": tensor dims are not multiplicative");
            DimensionPair ds = dims(h, direct_sum(h, v, w), phi);
            fold(ds.left == dv.left + dw.left && ds.right == dv.right + dw.right,
                 v.label + "(+)" + w.label + ": direct-sum dims are not additive");
        }
    return out;
}

CheckResult check_intertwined_dims(const PresentedHopf& h, const MatrixCorep& v,
                                   const MatrixCorep& w, const Matrix& t,
                                   const GenCharacter& phi, int d) {
    require_same_algebra(h, v);
    require_same_algebra(h, w);
    if (t.rows() != w.size || t.cols() != v.size)
        fail(errc::dimension_mismatch, "intertwiner shape mismatch");
    (void)t.inverse(); // must be invertible; throws errc::singular otherwise
    CheckResult out = CheckResult::pass("intertwined_dims", "", d);
    for (size_t i = 0; i < w.size; ++i)
        for (size_t j = 0; j < v.size; ++j) {
            NCPoly lhs(h.gens(), h.field()), rhs(h.gens(), h.field());
            for (size_t k = 0; k < w.size; ++k) lhs += w.at(i, k).scaled(t.at(k, j));
            for (size_t k = 0; k < v.size; ++k) rhs += v.at(k, j).scaled(t.at(i, k));
            CheckResult c = check_ideal_equal("intertwined_dims", lhs, rhs, *h.pres, d);
            if (!c.ok() && out.ok()) out.detail = "intertwiner condition fails";
            out.status = combine(out.status, c.status);
        }
    DimensionPair dv = dims(h, v, phi), dw = dims(h, w, phi);
    if (!(dv.left == dw.left && dv.right == dw.right)) {
        out.status = CheckStatus::fail;
        if (out.detail.empty()) out.detail = "intertwined coreps have different dims";
    }
    return out;
}

// ---- finite-dimensional flavor -------------------------------------------

namespace {
void require_square_fd(const FinHopf& a, const FdMatrixCorep& v) {
    if (v.size == 0 || v.entries.size() != v.size * v.size)
        fail(errc::dimension_mismatch, "corep entry count != size^2");
    for (const auto& e : v.entries)
        if (e.size() != a.dim) fail(errc::dimension_mismatch, "entry vector length != dim");
}

std::vector<Scalar> apply_antipode_vec(const FinHopf& a, const std::vector<Scalar>& x) {
    std::vector<Scalar> out(a.dim, Scalar::zero(a.field));
    for (size_t r = 0; r < a.dim; ++r)
        for (size_t m = 0; m < a.dim; ++m) out[r] += a.antipode.at(r, m) * x[m];
    return out;
}

Scalar dot(const FinHopf& a, const std::vector<Scalar>& chi, const std::vector<Scalar>& x) {
    Scalar v = Scalar::zero(a.field);
    for (size_t i = 0; i < a.dim; ++i) v += chi[i] * x[i];
    return v;
}
} // namespace

CheckResult check_corep_fd(const FinHopf& a, const FdMatrixCorep& v) {
    check_shapes(a);
    require_square_fd(a, v);
    size_t n = v.size, m = a.dim;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            for (size_t x = 0; x < m; ++x)
                for (size_t y = 0; y < m; ++y) {
                    Scalar lhs = Scalar::zero(a.field);
                    for (size_t p = 0; p < m; ++p) lhs += v.at(i, j)[p] * a.d(p, x, y);
                    Scalar rhs = Scalar::zero(a.field);
                    for (size_t k = 0; k < n; ++k) rhs += v.at(i, k)[x] * v.at(k, j)[y];
                    if (!(lhs == rhs))
                        return CheckResult::fail("corep_invariant",
                                                 "comultiplication mismatch at (" +
                                                     std::to_string(i) + "," + std::to_string(j) +
                                                     ")");
                }
            Scalar eps = dot(a, a.counit, v.at(i, j));
            Scalar expected = i == j ? Scalar::one(a.field) : Scalar::zero(a.field);
            if (!(eps == expected))
                return CheckResult::fail("corep_invariant", "counit mismatch at (" +
                                                                std::to_string(i) + "," +
                                                                std::to_string(j) + ")");
        }
    return CheckResult::pass("corep_invariant");
}

FdMatrixCorep regular_corep(const FinHopf& a) {
    check_shapes(a);
    FdMatrixCorep v;
    v.size = a.dim;
    v.label = "regular";
    v.entries.assign(a.dim * a.dim, std::vector<Scalar>(a.dim, Scalar::zero(a.field)));
    for (size_t i = 0; i < a.dim; ++i)
        for (size_t j = 0; j < a.dim; ++j)
            for (size_t k = 0; k < a.dim; ++k) v.at(j, i)[k] = a.d(i, j, k);
    return v;
}

FdMatrixCorep left_dual_fd(const FinHopf& a, const FdMatrixCorep& v) {
    require_square_fd(a, v);
    FdMatrixCorep out = v;
    out.label = v.label + "^lv";
    for (size_t i = 0; i < v.size; ++i)
        for (size_t j = 0; j < v.size; ++j) out.at(i, j) = apply_antipode_vec(a, v.at(j, i));
    return out;
}

FdMatrixCorep right_dual_fd(const FinHopf& a, const FdMatrixCorep& v) {
    require_square_fd(a, v);
    if (!a.antipode_inv) fail(errc::missing_inverse, "right dual needs the antipode inverse");
    FdMatrixCorep out = v;
    out.label = v.label + "^rv";
    for (size_t i = 0; i < v.size; ++i)
        for (size_t j = 0; j < v.size; ++j) {
            std::vector<Scalar> r(a.dim, Scalar::zero(a.field));
            for (size_t p = 0; p < a.dim; ++p)
                for (size_t m = 0; m < a.dim; ++m)
                    r[p] += a.antipode_inv->at(p, m) * v.at(j, i)[m];
            out.at(i, j) = r;
        }
    return out;
}

FdMatrixCorep tensor_corep_fd(const FinHopf& a, const FdMatrixCorep& v, const FdMatrixCorep& w) {
    require_square_fd(a, v);
    require_square_fd(a, w);
    FdMatrixCorep out;
    out.size = v.size * w.size;
    out.label = v.label + "(x)" + w.label;
    out.entries.assign(out.size * out.size, std::vector<Scalar>(a.dim, Scalar::zero(a.field)));
    for (size_t i = 0; i < v.size; ++i)
        for (size_t j = 0; j < w.size; ++j)
            for (size_t k = 0; k < v.size; ++k)
                for (size_t l = 0; l < w.size; ++l)
                    out.at(i * w.size + j, k * w.size + l) = fd_mul(a, v.at(i, k), w.at(j, l));
    return out;
}

DimensionPair dims_fd(const FinHopf& a, const FdMatrixCorep& v, const GenCharacter& phi) {
    require_square_fd(a, v);
    if (phi.values.size() != a.dim) fail(errc::missing_value, "character values incomplete");
    Scalar l = Scalar::zero(a.field), r = Scalar::zero(a.field);
    for (size_t i = 0; i < v.size; ++i) {
        l += dot(a, phi.values, v.at(i, i));
        r += dot(a, phi.values, apply_antipode_vec(a, v.at(i, i)));
    }
    return {l, r};
}

} // namespace cosov
