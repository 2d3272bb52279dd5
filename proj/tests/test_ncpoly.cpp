#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cosov/ncpoly.hpp"

using namespace cosov;

namespace {

const FieldDesc Q = FieldDesc::rationals();

GenSetPtr uv2() {
    return std::make_shared<GenSet>(std::vector<std::string>{"u11", "u12", "u21", "u22",
                                                             "v11", "v12", "v21", "v22"});
}

NCPoly gen(const GenSetPtr& g, const std::string& name) {
    return NCPoly::generator(g, Q, g->index(name));
}

NCPoly random_poly(std::mt19937_64& rng, const GenSetPtr& g, size_t max_deg) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<size_t> deg(0, max_deg);
    std::uniform_int_distribution<size_t> nterms(1, 3);
    std::uniform_int_distribution<uint16_t> pick(0, static_cast<uint16_t>(g->size() - 1));
    NCPoly p(g, Q);
    size_t k = nterms(rng);
    for (size_t t = 0; t < k; ++t) {
        Word w(deg(rng));
        for (auto& x : w) x = pick(rng);
        p.add_term(w, Scalar::from_int(Q, coeff(rng)));
    }
    return p;
}

} // namespace

TEST_CASE("unit and distributivity") {
    auto g = uv2();
    std::mt19937_64 rng(1);
    NCPoly p = random_poly(rng, g, 3);
    CHECK(NCPoly::one(g, Q) * p == p);
    CHECK(p * NCPoly::one(g, Q) == p);

    NCPoly lhs = (gen(g, "u11") + gen(g, "u12")) * gen(g, "v11");
    NCPoly rhs = gen(g, "u11") * gen(g, "v11") + gen(g, "u12") * gen(g, "v11");
    CHECK(lhs == rhs);
    CHECK(lhs.terms().size() == 2);
}

TEST_CASE("associativity on random triples") {
    auto g = uv2();
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 500; ++i) {
        NCPoly p = random_poly(rng, g, 3);
        NCPoly q = random_poly(rng, g, 3);
        NCPoly r = random_poly(rng, g, 3);
        REQUIRE((p * q) * r == p * (q * r));
    }
}

TEST_CASE("ring axioms on random elements") {
    auto g = uv2();
    std::mt19937_64 rng(5);
    for (int i = 0; i < 300; ++i) {
        NCPoly p = random_poly(rng, g, 3);
        NCPoly q = random_poly(rng, g, 3);
        NCPoly r = random_poly(rng, g, 3);
        REQUIRE(p + q == q + p);
        REQUIRE(p * (q + r) == p * q + p * r);
        REQUIRE((p + q) * r == p * r + q * r);
        REQUIRE(p - p == NCPoly::zero(g, Q));
    }
}

TEST_CASE("word order is degree then lexicographic") {
    WordLess less;
    CHECK(less(Word{}, Word{0}));
    CHECK(less(Word{7}, Word{0, 0}));
    CHECK(less(Word{0, 1}, Word{0, 2}));
    CHECK(less(Word{0, 7}, Word{1, 0}));
    CHECK_FALSE(less(Word{1}, Word{1}));
}

TEST_CASE("words_up_to enumerates the full truncated monoid") {
    auto w = words_up_to(3, 3);
    CHECK(w.size() == 1 + 3 + 9 + 27);
    // ordered by degree
    for (size_t i = 1; i < w.size(); ++i) REQUIRE(w[i - 1].size() <= w[i].size());
}

TEST_CASE("apply_algebra_map: identity images and multiplicativity") {
    auto g = uv2();
    std::vector<NCPoly> id_images;
    for (size_t i = 0; i < g->size(); ++i) id_images.push_back(NCPoly::generator(g, Q, i));
    std::mt19937_64 rng(9);
    NCPoly p = random_poly(rng, g, 3);
    CHECK(apply_algebra_map(id_images, p) == p);

    // images chosen arbitrarily; image of a word is the product of images
    std::vector<NCPoly> images;
    for (size_t i = 0; i < g->size(); ++i)
        images.push_back(NCPoly::generator(g, Q, (i + 1) % g->size()) +
                         NCPoly::one(g, Q).scaled(Scalar::from_int(Q, static_cast<long>(i))));
    NCPoly word = gen(g, "u11") * gen(g, "u12");
    CHECK(apply_algebra_map(images, word) ==
          images[g->index("u11")] * images[g->index("u12")]);
}

TEST_CASE("apply_anti_map reverses words") {
    auto g = uv2();
    std::vector<NCPoly> images;
    for (size_t i = 0; i < g->size(); ++i)
        images.push_back(NCPoly::generator(g, Q, (i + 3) % g->size()));

    CHECK(apply_anti_map(images, gen(g, "u21")) == images[g->index("u21")]);
    NCPoly gh = gen(g, "u11") * gen(g, "v22");
    CHECK(apply_anti_map(images, gh) ==
          images[g->index("v22")] * images[g->index("u11")]);

    // agreement with the algebra map in degree <= 1
    std::mt19937_64 rng(11);
    for (int i = 0; i < 100; ++i) {
        NCPoly p = random_poly(rng, g, 1);
        REQUIRE(apply_anti_map(images, p) == apply_algebra_map(images, p));
    }
}

TEST_CASE("tensor products") {
    auto g = uv2();
    NCPoly a = gen(g, "u11") + gen(g, "u12");
    NCPoly b = gen(g, "v11");
    TensorPoly t = TensorPoly::tensor(a, b);
    CHECK(t.terms().size() == 2);
    TensorPoly prod = t * TensorPoly::tensor(NCPoly::one(g, Q), gen(g, "v12"));
    CHECK(prod == TensorPoly::tensor(a, b * gen(g, "v12")));
}

TEST_CASE("scalar map is multiplicative") {
    auto g = uv2();
    std::vector<Scalar> vals;
    for (size_t i = 0; i < g->size(); ++i) vals.push_back(Scalar::from_int(Q, static_cast<long>(i) - 3));
    std::mt19937_64 rng(13);
    for (int i = 0; i < 100; ++i) {
        NCPoly p = random_poly(rng, g, 2);
        NCPoly q = random_poly(rng, g, 2);
        REQUIRE(apply_scalar_map(vals, Q, p * q) ==
                apply_scalar_map(vals, Q, p) * apply_scalar_map(vals, Q, q));
    }
}

TEST_CASE("string forms") {
    auto g = uv2();
    CHECK(NCPoly::zero(g, Q).to_string() == "0");
    CHECK((gen(g, "u11") * gen(g, "v21")).to_string() == "1*u11*v21");
    CHECK(word_to_string(*g, Word{}) == "1");
}
