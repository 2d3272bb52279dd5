#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cosov/forms.hpp"

using namespace cosov;

namespace {
const FieldDesc Q = FieldDesc::rationals();

GenCharacter sweedler_phi_fd() {
    return {{Scalar::one(Q), Scalar::from_int(Q, -1), Scalar::zero(Q), Scalar::zero(Q)}};
}
} // namespace

TEST_CASE("the counit is a character everywhere") {
    for (const PresentedHopf& h :
         {builtin_laurent(), builtin_sweedler_presented(), builtin_Hn(2)})
        CHECK(check_character(h, counit_character(h)).ok());
    for (const FinHopf& a : {builtin_sweedler(), builtin_cyclic_group_algebra(2)})
        CHECK(check_character_fd(a, counit_character_fd(a)).ok());
}

TEST_CASE("Sweedler characters are exactly eps and (g,x) -> (-1,0)") {
    PresentedHopf h = builtin_sweedler_presented();
    for (long a = -2; a <= 2; ++a)
        for (long b = -2; b <= 2; ++b) {
            GenCharacter chi{{Scalar::from_int(Q, a), Scalar::from_int(Q, b)}};
            bool expected = (b == 0) && (a == 1 || a == -1);
            REQUIRE(check_character(h, chi).ok() == expected);
        }

    FinHopf fd = builtin_sweedler();
    CHECK(check_character_fd(fd, sweedler_phi_fd()).ok());
    GenCharacter bad{{Scalar::one(Q), Scalar::from_int(Q, -1), Scalar::one(Q), Scalar::zero(Q)}};
    CHECK_FALSE(check_character_fd(fd, bad).ok());
}

TEST_CASE("convolution with the counit is neutral") {
    PresentedHopf h = builtin_sweedler_presented();
    GenCharacter phi{{Scalar::from_int(Q, -1), Scalar::zero(Q)}};
    GenCharacter eps = counit_character(h);
    CHECK(convolve_characters(h, phi, eps).values == phi.values);
    CHECK(convolve_characters(h, eps, phi).values == phi.values);

    FinHopf fd = builtin_sweedler();
    GenCharacter pf = sweedler_phi_fd();
    CHECK(convolve_characters_fd(fd, pf, counit_character_fd(fd)).values == pf.values);
}

TEST_CASE("the nontrivial Sweedler character is an involution") {
    PresentedHopf h = builtin_sweedler_presented();
    GenCharacter phi{{Scalar::from_int(Q, -1), Scalar::zero(Q)}};
    CHECK(convolve_characters(h, phi, phi).values == counit_character(h).values);
    CHECK(character_inverse(h, phi).values == phi.values);
    CHECK(character_inverse(h, counit_character(h)).values == counit_character(h).values);

    FinHopf fd = builtin_sweedler();
    CHECK(convolve_characters_fd(fd, sweedler_phi_fd(), sweedler_phi_fd()).values ==
          counit_character_fd(fd).values);
    CHECK(character_inverse_fd(fd, sweedler_phi_fd()).values == sweedler_phi_fd().values);
}

TEST_CASE("fd sovereign verification on Sweedler and group algebras") {
    FinHopf sw = builtin_sweedler();
    CHECK(verify_sovereign_fd(sw, sweedler_phi_fd()).ok());
    CHECK(verify_sovereign_s2_fd(sw, sweedler_phi_fd()).ok());
    // eps is not sovereign on Sweedler (S^2 != id)
    CHECK(verify_sovereign_fd(sw, counit_character_fd(sw)).status == CheckStatus::fail);
    CHECK(verify_sovereign_s2_fd(sw, counit_character_fd(sw)).status == CheckStatus::fail);

    for (size_t m : {2u, 3u}) {
        FinHopf g = builtin_cyclic_group_algebra(m);
        CHECK(verify_sovereign_fd(g, counit_character_fd(g)).ok());
        CHECK(verify_sovereign_s2_fd(g, counit_character_fd(g)).ok());
    }
}

TEST_CASE("presented sovereign verification on Sweedler") {
    PresentedHopf h = builtin_sweedler_presented();
    GenCharacter phi{{Scalar::from_int(Q, -1), Scalar::zero(Q)}};
    CHECK(verify_sovereign_pres(h, phi, 3).ok());
    CHECK(verify_sovereign_s2_pres(h, phi, 3).ok());
    CheckResult eps_sov = verify_sovereign_pres(h, counit_character(h), 3);
    CheckResult eps_s2 = verify_sovereign_s2_pres(h, counit_character(h), 3);
    CHECK(eps_sov.status == CheckStatus::fail);
    CHECK(eps_s2.status == eps_sov.status);
}

TEST_CASE("H_n character family: the verifier decides sovereignty") {
    PresentedHopf h = builtin_Hn(1);
    size_t x = h.gens()->index("X1"), p = h.gens()->index("Phi"), pi = h.gens()->index("PhiInv");
    for (long c : {1L, 2L, -1L}) {
        GenCharacter chi{std::vector<Scalar>(3, Scalar::zero(Q))};
        chi.values[x] = Scalar::zero(Q);
        chi.values[p] = Scalar::from_int(Q, c);
        chi.values[pi] = Scalar::from_int(Q, c).inverse();
        REQUIRE(check_character(h, chi).ok());
        CheckResult sov = verify_sovereign_pres(h, chi, 3);
        CheckResult s2 = verify_sovereign_s2_pres(h, chi, 3);
        // Phi and X_i generate a free product, so no character is sovereign
        REQUIRE(sov.status != CheckStatus::pass);
        REQUIRE(s2.status == sov.status);
    }
}

TEST_CASE("Laurent character group laws, randomized") {
    PresentedHopf h = builtin_laurent();
    std::mt19937_64 rng(2468);
    std::uniform_int_distribution<long> num(-9, 9);
    auto random_char = [&]() {
        long a = 0;
        while (a == 0) a = num(rng);
        GenCharacter chi{{Scalar::from_int(Q, a), Scalar::from_int(Q, a).inverse()}};
        return chi;
    };
    GenCharacter eps = counit_character(h);
    for (int i = 0; i < 1100; ++i) {
        GenCharacter a = random_char(), b = random_char(), c = random_char();
        REQUIRE(check_character(h, a).ok());
        REQUIRE(convolve_characters(h, convolve_characters(h, a, b), c).values ==
                convolve_characters(h, a, convolve_characters(h, b, c)).values);
        REQUIRE(convolve_characters(h, a, eps).values == a.values);
        REQUIRE(convolve_characters(h, a, character_inverse(h, a)).values == eps.values);
    }
}

TEST_CASE("incomplete character values are rejected") {
    PresentedHopf h = builtin_laurent();
    GenCharacter chi{{Scalar::one(Q)}};
    try {
        check_character(h, chi);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == errc::missing_value);
    }
}

TEST_CASE("inverse consistency guards broken antipode data") {
    PresentedHopf h = builtin_laurent();
    h.antipode[0] = NCPoly::generator(h.gens(), Q, 0); // S(t) = t, wrong
    GenCharacter chi{{Scalar::from_int(Q, 2), Scalar::from_rational(Q, mpq_class(1, 2))}};
    try {
        character_inverse(h, chi);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == errc::inverse_check_failed);
    }
}
