#include <gtest/gtest.h>

#include "chaincodes/error.hpp"
#include "chaincodes/literals.hpp"
#include "test_util.hpp"

using namespace chaincodes;
using testutil::random_element;

namespace {

FAlgebraElement el(const char* text, const GroupPtr& g, Coeff p = 2) { return parse_element(text, g, p); }

}  // namespace

TEST(FieldAlgebraTest, MultiplicationExamples) {
    auto c3 = make_cyclic(3);
    EXPECT_TRUE(alg_mul(el("1+x", c3), el("1+x+x^2", c3)).is_zero());
    EXPECT_EQ(alg_mul(el("x+x^2", c3), el("x+x^2", c3)), el("x+x^2", c3));

    std::mt19937_64 rng(7);
    auto d8 = make_dihedral(4);
    auto b = random_element(d8, 3, rng);
    EXPECT_EQ(alg_mul(FAlgebraElement::one(d8, 3), b), b);
}

TEST(FieldAlgebraTest, StarExamples) {
    auto c3 = make_cyclic(3);
    EXPECT_EQ(star(el("x", c3)), el("x^2", c3));
    EXPECT_EQ(star(el("x+x^2", c3)), el("x+x^2", c3));
    std::mt19937_64 rng(11);
    for (int i = 0; i < 20; ++i) {
        auto a = random_element(make_dihedral(5), 3, rng);
        EXPECT_EQ(star(star(a)), a);
    }
}

TEST(FieldAlgebraTest, BilinearFormExamples) {
    auto c3 = make_cyclic(3);
    EXPECT_EQ(bilinear_form(el("1+x", c3), el("x+x^2", c3)), 1u);
    auto c2 = make_cyclic(2);
    EXPECT_EQ(bilinear_form(el("1+x", c2), el("1+x", c2)), 0u);
}

TEST(FieldAlgebraTest, IdempotentExamples) {
    auto c3 = make_cyclic(3);
    EXPECT_TRUE(is_idempotent(FAlgebraElement::zero(c3, 2)));
    EXPECT_TRUE(is_idempotent(FAlgebraElement::one(c3, 2)));
    EXPECT_TRUE(is_idempotent(el("x+x^2", c3)));
    EXPECT_FALSE(is_idempotent(el("1+x", make_cyclic(2))));
}

TEST(FieldAlgebraTest, Mismatches) {
    auto c3 = make_cyclic(3);
    try {
        alg_mul(FAlgebraElement::one(c3, 2), FAlgebraElement::one(c3, 3));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::IncompatibleOperands);
    }
    EXPECT_THROW(bilinear_form(FAlgebraElement::one(c3, 2), FAlgebraElement::one(make_cyclic(4), 2)), Error);
    EXPECT_THROW(FAlgebraElement(c3, 4), Error);
    EXPECT_THROW(FAlgebraElement(c3, 2, {0, 1}), Error);
    EXPECT_EQ(FAlgebraElement(c3, 2, {0, 1, 2}), FAlgebraElement(c3, 2, {0, 1, 0}));  // coefficients reduce mod p
}

TEST(FieldAlgebraTest, RingAxiomsRandomized) {
    std::mt19937_64 rng(2024);
    for (const auto& g : testutil::small_groups(24)) {
        for (Coeff p : {2u, 3u, 5u}) {
            for (int t = 0; t < 3; ++t) {
                auto a = random_element(g, p, rng), b = random_element(g, p, rng), c = random_element(g, p, rng);
                EXPECT_EQ(alg_mul(alg_mul(a, b), c), alg_mul(a, alg_mul(b, c)));
                EXPECT_EQ(alg_mul(a, b + c), alg_mul(a, b) + alg_mul(a, c));
                EXPECT_EQ(alg_mul(a + b, c), alg_mul(a, c) + alg_mul(b, c));
                EXPECT_EQ(star(alg_mul(a, b)), alg_mul(star(b), star(a)));
                EXPECT_EQ(bilinear_form(alg_mul(a, c), b), bilinear_form(a, alg_mul(b, star(c))));
                EXPECT_EQ(bilinear_form(a, b), alg_mul(a, star(b))[0]);
                const Elem h = static_cast<Elem>(rng() % g->order());
                const auto gh = FAlgebraElement::basis(g, p, h);
                EXPECT_EQ(bilinear_form(alg_mul(gh, a), alg_mul(gh, b)), bilinear_form(a, b));
            }
        }
    }
}

TEST(FieldAlgebraTest, PackedMatchesGeneric) {
    std::mt19937_64 rng(99);
    for (std::size_t n : {1, 2, 3, 5, 8, 12, 16, 24, 32}) {
        for (auto g : {make_dihedral(n), make_cyclic(2 * n)}) {
            const PackedF2Algebra alg(*g);
            for (int t = 0; t < 20; ++t) {
                auto a = random_element(g, 2, rng), b = random_element(g, 2, rng);
                EXPECT_EQ(alg.mul(a.to_bits(), b.to_bits()), alg_mul_generic(a, b).to_bits());
                EXPECT_EQ(alg_mul(a, b), alg_mul_generic(a, b));
                EXPECT_EQ(alg.star(a.to_bits()), star(a).to_bits());
                EXPECT_EQ(alg.is_idempotent(a.to_bits()), is_idempotent(a));
            }
        }
    }
}

TEST(FieldAlgebraTest, PrimesAndInverses) {
    EXPECT_TRUE(is_prime(2));
    EXPECT_TRUE(is_prime(97));
    EXPECT_FALSE(is_prime(1));
    EXPECT_FALSE(is_prime(91));
    for (Coeff p : {2u, 3u, 7u, 13u})
        for (Coeff a = 1; a < p; ++a) EXPECT_EQ(a * inverse_mod(a, p) % p, 1u);
}
