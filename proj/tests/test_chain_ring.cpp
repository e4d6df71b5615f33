#include <gtest/gtest.h>

#include "chaincodes/chain_ring.hpp"
#include "chaincodes/error.hpp"

using namespace chaincodes;

namespace {

std::vector<ChainRingSpec> specs() {
    std::vector<ChainRingSpec> out;
    for (std::uint32_t p : {2u, 3u, 5u})
        for (unsigned ell : {1u, 2u, 3u, 4u})
            for (auto f : {RingFlavor::IntegerResidue, RingFlavor::Polynomial}) out.push_back({p, ell, f});
    return out;
}

}  // namespace

TEST(ChainRingTest, ValuationExamples) {
    ChainRing z8({2, 3, RingFlavor::IntegerResidue});
    EXPECT_EQ(z8.valuation(4), 2u);
    EXPECT_EQ(z8.valuation(0), 3u);
    ChainRing f2u({2, 2, RingFlavor::Polynomial});
    EXPECT_EQ(f2u.valuation(f2u.pi_pow(1)), 1u);
    EXPECT_EQ(f2u.to_text(f2u.pi_pow(1)), "u");
}

TEST(ChainRingTest, AlphaExamples) {
    ChainRing z8({2, 3, RingFlavor::IntegerResidue});
    EXPECT_EQ(z8.alpha(6, 1), 1u);
    EXPECT_EQ(z8.alpha(5, 0), 1u);
    EXPECT_EQ(z8.alpha_up(1, 2), 4u);
    try {
        z8.alpha(2, 2);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotInLayer);
    }
}

TEST(ChainRingTest, SpecStrings) {
    EXPECT_EQ(parse_ring_spec("Z:2^2"), (ChainRingSpec{2, 2, RingFlavor::IntegerResidue}));
    EXPECT_EQ(parse_ring_spec("poly:3^3"), (ChainRingSpec{3, 3, RingFlavor::Polynomial}));
    EXPECT_EQ((ChainRingSpec{5, 1, RingFlavor::Polynomial}).to_string(), "poly:5^1");
    for (const char* bad : {"Z:4^2", "Z:2^0", "Z2^2", "ring:2^2", "Z:2^", ""}) EXPECT_THROW(parse_ring_spec(bad), Error) << bad;
}

TEST(ChainRingTest, FieldAxiomsExhaustive) {
    for (const auto& s : specs()) {
        ChainRing r(s);
        const Scalar q = r.size();
        for (Scalar a = 0; a < q; ++a) {
            EXPECT_EQ(r.add(a, r.neg(a)), 0u);
            EXPECT_EQ(r.mul(a, 1), a);
            if (r.is_unit(a)) EXPECT_EQ(r.mul(a, r.unit_inverse(a)), 1u);
            for (Scalar b = 0; b < q; ++b) {
                EXPECT_EQ(r.add(a, b), r.add(b, a));
                EXPECT_EQ(r.mul(a, b), r.mul(b, a));
                const unsigned va = r.valuation(a), vb = r.valuation(b);
                EXPECT_EQ(r.valuation(r.mul(a, b)), std::min(va + vb, r.ell()));
                EXPECT_GE(r.valuation(r.add(a, b)), std::min(va, vb));
                for (unsigned j = 0; j < r.ell(); ++j)
                    if (va >= j && vb >= j)
                        EXPECT_EQ(r.alpha(r.add(a, b), j), (r.alpha(a, j) + r.alpha(b, j)) % r.p());
                if (r.is_unit(a) && r.is_unit(b))
                    EXPECT_EQ(r.alpha(r.mul(a, b), 0), r.alpha(a, 0) * r.alpha(b, 0) % r.p());
            }
        }
    }
}

TEST(ChainRingTest, DivisionAndReduction) {
    for (const auto& s : specs()) {
        ChainRing r(s);
        for (Scalar x = 0; x < r.size(); ++x) {
            const unsigned v = r.valuation(x);
            for (unsigned j = 0; j <= v && j <= r.ell(); ++j) {
                const Scalar y = r.divide_by_pi_pow(x, j);
                EXPECT_EQ(r.mul(r.pi_pow(j), y), x);
            }
            for (unsigned j = 0; j <= r.ell(); ++j) {
                const Scalar rem = r.reduce_mod_pi_pow(x, j);
                EXPECT_GE(r.valuation(r.sub(x, rem)), j);
            }
            for (unsigned j = 0; j < r.ell(); ++j)
                for (std::uint32_t f = 0; f < r.p(); ++f) EXPECT_EQ(r.alpha(r.alpha_up(f, j), j), f);
        }
        EXPECT_EQ(r.pi_pow(r.ell()), 0u);
        EXPECT_THROW(r.unit_inverse(r.pi_pow(1) % r.size()), Error);
    }
}

TEST(ChainRingTest, LargeRingsWithoutTables) {
    ChainRing big({3, 12, RingFlavor::IntegerResidue});  // 3^12 > table threshold
    const Scalar x = 2 * 3 * 3 * 5;
    EXPECT_EQ(big.valuation(x), 2u);
    EXPECT_EQ(big.mul(big.unit_inverse(7), 7), 1u);
    ChainRing bigp({2, 10, RingFlavor::Polynomial});
    const Scalar u3 = bigp.pi_pow(3);
    EXPECT_EQ(bigp.valuation(bigp.mul(u3, bigp.pi_pow(4))), 7u);
    EXPECT_EQ(bigp.mul(bigp.unit_inverse(bigp.add(1, u3)), bigp.add(1, u3)), 1u);
}

TEST(ChainRingTest, EuclideanWeight) {
    ChainRing z4({2, 2, RingFlavor::IntegerResidue});
    EXPECT_EQ(z4.euclidean_weight(2), 4u);
    EXPECT_EQ(z4.euclidean_weight(3), 1u);
    EXPECT_EQ(z4.euclidean_weight(0), 0u);
    ChainRing z9({3, 2, RingFlavor::IntegerResidue});
    EXPECT_EQ(z9.euclidean_weight(5), 16u);
    ChainRing poly({2, 2, RingFlavor::Polynomial});
    try {
        poly.euclidean_weight(1);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::UnsupportedRing);
    }
}

TEST(ChainRingTest, PolynomialArithmetic) {
    ChainRing r({3, 3, RingFlavor::Polynomial});
    // (1 + u) (1 + 2u) = 1 + 2u^2 over F_3
    const Scalar a = 1 + 3, b = 1 + 2 * 3;
    EXPECT_EQ(r.mul(a, b), 1 + 2 * 9u);
    EXPECT_EQ(r.to_text(1 + 2 * 9), "1+2u^2");
    EXPECT_EQ(r.from_int(4), 1u);
}
