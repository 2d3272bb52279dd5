#pragma once

#include <functional>
#include <mutex>

#include "cosov/forms.hpp"

namespace cosov {

/// A cobraiding on a presented Hopf algebra, given by its generator-pair
/// tables and extended to words by the recursion
///   sigma(xy, z) = sum sigma(x, z_1) sigma(y, z_2)
///   sigma(x, yz) = sum sigma(x_1, z) sigma(x_2, y)
/// with sigma(1, x) = eps(x) = sigma(x, 1). The inverse form follows the
/// reversed recursion. Evaluation requires every generator coproduct to have
/// legs of degree <= 1 (true for all builtins), which makes the recursion
/// terminate: each step strictly shortens one argument.
struct Cobraiding {
    PresentedHopf hopf;
    std::vector<Scalar> table;     // row-major n x n, sigma(g_i, g_j)
    std::vector<Scalar> inv_table; // sigma^{-1}(g_i, g_j)

    struct Memo {
        std::mutex mutex;
        std::map<std::pair<Word, Word>, Scalar> fwd, inv;
    };
    std::shared_ptr<Memo> memo = std::make_shared<Memo>();
};

/// Which letter the word recursion peels first; the two strategies must
/// agree by coassociativity (the module's self-consistency oracle).
enum class PeelStrategy { first_letter, last_letter };

/// Builds a cobraiding; when inv_table is empty it is derived from
/// sigma^{-1}(x, y) = sigma(S(x), y); when given, it is cross-checked
/// against that derivation (errc::inverse_check_failed on mismatch).
Cobraiding make_cobraiding(PresentedHopf hopf, std::vector<Scalar> table,
                           std::vector<Scalar> inv_table = {});

/// Bilinear evaluation of sigma / sigma^{-1} on free-algebra elements.
Scalar sigma_eval(const Cobraiding& c, const NCPoly& p, const NCPoly& r,
                  PeelStrategy strategy = PeelStrategy::first_letter);
Scalar sigma_inv_eval(const Cobraiding& c, const NCPoly& p, const NCPoly& r);

/// (A.1) on generator pairs as ideal membership, vanishing on relations in
/// either slot, and sigma * sigma^{-1} = eps (x) eps on word pairs of total
/// degree <= d.
Report check_cobraiding(const Cobraiding& c, int d);

/// lambda(x) = sum sigma(x_1, S(x_2)); beta(x) = sum sigma^{-1}(S(x_1), x_2).
Scalar lambda_form(const Cobraiding& c, const NCPoly& p);
Scalar beta_form(const Cobraiding& c, const NCPoly& p);

/// lambda * beta = eps = beta * lambda on words of degree <= d.
CheckResult check_lambda_beta_inverse(const Cobraiding& c, int d);

/// S^2 == beta * id * lambda modulo the ideal, on every generator.
CheckResult check_s2_convolution(const Cobraiding& c, int d);

/// beta(xy) == sum sigma(y_1, x_1) beta(x_2) beta(y_2) sigma(x_3, y_3) on
/// word pairs of total degree <= d, as exact scalars.
CheckResult check_lemma_A2(const Cobraiding& c, int d);

/// One word pair instance of the same identity (exact).
bool lemma_A2_holds(const Cobraiding& c, const Word& x, const Word& y);

/// sigma^{-1}(x,y) == sigma(S(x),y); sigma(x,y) == sigma^{-1}(x,S(y));
/// sigma(x,y) == sigma(S(x),S(y)) on word pairs of total degree <= d.
CheckResult check_A5_A7(const Cobraiding& c, int d);

/// A cotwist candidate: a linear form and its convolution inverse given as
/// word evaluators (linear extension is implied).
struct CotwistData {
    std::function<Scalar(const Word&)> tau;
    std::function<Scalar(const Word&)> tau_inv;
};

Scalar cotwist_eval(const CotwistData& t, const FieldDesc& f, const NCPoly& p);
Scalar cotwist_inv_eval(const CotwistData& t, const FieldDesc& f, const NCPoly& p);

/// Three named checks on words of degree <= d: map-level centrality
/// sum tau(x_1) x_2 == sum x_1 tau(x_2) mod ideal; tau * tau^{-1} = eps;
/// the cotwist equation tau(xy) = sum sigma(y_1,x_1) tau(x_2) tau(y_2)
/// sigma(x_3,y_3) on word pairs of total degree <= d.
Report check_cotwist(const Cobraiding& c, const CotwistData& t, int d);

/// tau = Phi * beta with tau^{-1} = lambda * Phi^{-1}; Phi must be a
/// character (checked; the sovereign property is the caller's concern).
CotwistData thm_A3_forward(const Cobraiding& c, const GenCharacter& phi);
/// Phi = tau * beta^{-1} = tau * lambda, evaluated on generators.
GenCharacter thm_A3_backward(const Cobraiding& c, const CotwistData& t);

/// The one-parameter Sweedler family sigma(g,g) = -1, sigma(g,x) =
/// sigma(x,g) = 0, sigma(x,x) = xx (the exposed free parameter; default 1).
Cobraiding builtin_sweedler_cobraiding(const Scalar& xx);

/// The trivial cobraiding eps (x) eps (valid on commutative targets).
Cobraiding trivial_cobraiding(PresentedHopf hopf);

} // namespace cosov
