#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cosov/scalar.hpp"

using namespace cosov;

namespace {

const FieldDesc Q = FieldDesc::rationals();
const FieldDesc Qq = FieldDesc::rational_functions("q");

Poly poly(std::initializer_list<long> ascending) {
    std::vector<mpq_class> c;
    for (long v : ascending) c.emplace_back(v);
    return Poly(std::move(c));
}

Scalar random_scalar(std::mt19937_64& rng, const FieldDesc& f) {
    std::uniform_int_distribution<int> coeff(-5, 5);
    std::uniform_int_distribution<int> deg(0, 2);
    auto rand_poly = [&](bool allow_zero) {
        while (true) {
            std::vector<mpq_class> c(static_cast<size_t>(deg(rng)) + 1);
            for (auto& x : c) x = coeff(rng);
            Poly p{std::move(c)};
            if (allow_zero || !p.is_zero()) return p;
        }
    };
    if (f.kind == FieldDesc::Kind::Rationals) {
        mpq_class num(coeff(rng));
        mpq_class den(0);
        while (den == 0) den = coeff(rng);
        return Scalar::from_rational(f, num / den);
    }
    return Scalar::fraction(f, rand_poly(true), rand_poly(false));
}

} // namespace

TEST_CASE("gcd reduction of rational functions") {
    // (q-1)/(q^2-1) -> 1/(q+1)
    Scalar s = Scalar::fraction(Qq, poly({-1, 1}), poly({-1, 0, 1}));
    CHECK(s.to_string() == "1/(q+1)");
    CHECK(s == Scalar::fraction(Qq, poly({1}), poly({1, 1})));
}

TEST_CASE("additive identity") {
    Scalar x = Scalar::fraction(Qq, poly({2, 3}), poly({1, 0, 1}));
    CHECK(x + Scalar::zero(Qq) == x);
    CHECK(Scalar::from_rational(Q, mpq_class(-7, 3)) + Scalar::zero(Q) ==
          Scalar::from_rational(Q, mpq_class(-7, 3)));
}

TEST_CASE("(1+q)(1+1/q) expands to (q^2+2q+1)/q") {
    Scalar q = Scalar::variable(Qq);
    Scalar one = Scalar::one(Qq);
    Scalar prod = (one + q) * (one + q.inverse());
    CHECK(prod == Scalar::fraction(Qq, poly({1, 2, 1}), poly({0, 1})));
    CHECK(prod.to_string() == "(q^2+2*q+1)/q");
    CHECK(prod.eval_at(mpq_class(2)) == mpq_class(9, 2));
}

TEST_CASE("canonical text forms") {
    CHECK(Scalar::from_rational(Q, mpq_class(-2, 3)).to_string() == "-2/3");
    CHECK(Scalar::zero(Qq).to_string() == "0");
    Scalar q = Scalar::variable(Qq);
    CHECK((q + Scalar::one(Qq)).to_string() == "q+1");
    CHECK(q.inverse().to_string() == "1/q");
    CHECK((-q).to_string() == "-q");
    // half of q: rational coefficients scale to coprime integer form
    Scalar half_q = q * Scalar::from_rational(Qq, mpq_class(1, 2));
    CHECK(half_q.to_string() == "q/2");
}

TEST_CASE("normalization idempotence") {
    Scalar s = Scalar::fraction(Qq, poly({0, 2, 2}), poly({0, 0, 4}));
    Scalar again = Scalar::fraction(Qq, s.num(), s.den());
    CHECK(s == again);
    CHECK(s.den().leading() == 1);
}

TEST_CASE("division errors") {
    CHECK_THROWS_AS(Scalar::one(Q) / Scalar::zero(Q), Error);
    CHECK_THROWS_AS(Scalar::zero(Qq).inverse(), Error);
    try {
        Scalar::fraction(Qq, poly({1}), poly({}));
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == errc::division_by_zero);
    }
}

TEST_CASE("field mismatch is rejected") {
    try {
        (void)(Scalar::one(Q) + Scalar::one(Qq));
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == errc::field_mismatch);
    }
}

TEST_CASE("field axioms, randomized") {
    std::mt19937_64 rng(0xC05C05ULL);
    for (const FieldDesc& f : {Q, Qq}) {
        for (int i = 0; i < 550; ++i) {
            Scalar a = random_scalar(rng, f);
            Scalar b = random_scalar(rng, f);
            Scalar c = random_scalar(rng, f);
            REQUIRE((a + b) + c == a + (b + c));
            REQUIRE((a * b) * c == a * (b * c));
            REQUIRE(a * (b + c) == a * b + a * c);
            REQUIRE(a + b == b + a);
            REQUIRE(a * b == b * a);
            REQUIRE(a - a == Scalar::zero(f));
            if (!a.is_zero()) {
                REQUIRE(a * a.inverse() == Scalar::one(f));
                REQUIRE(b / a * a == b);
            }
        }
    }
}

TEST_CASE("evaluation is a homomorphism") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 200; ++i) {
        Scalar a = random_scalar(rng, Qq);
        Scalar b = random_scalar(rng, Qq);
        mpq_class x(3, 2);
        if (a.den().eval(x) == 0 || b.den().eval(x) == 0) continue;
        REQUIRE((a + b).eval_at(x) == a.eval_at(x) + b.eval_at(x));
        REQUIRE((a * b).eval_at(x) == a.eval_at(x) * b.eval_at(x));
    }
}
