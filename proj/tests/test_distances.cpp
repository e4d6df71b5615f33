#include <gtest/gtest.h>

#include <cmath>

#include "chaincodes/error.hpp"
#include "chaincodes/literals.hpp"
#include "chaincodes/idempotent_search.hpp"
#include "test_util.hpp"

using namespace chaincodes;

namespace {

RCode ideal(const char* gen, const GroupPtr& g, const RingPtr& r) {
    return RCode::left_ideal(g, r, {parse_r_element(gen, g, r)});
}

// Independent oracle: minimum weights over every element of the brute-force closure.
std::pair<std::size_t, std::uint64_t> brute_weights(const RCode& c) {
    std::vector<std::vector<Scalar>> gens(c.rows().begin(), c.rows().end());
    std::size_t ham = SIZE_MAX;
    std::uint64_t euc = UINT64_MAX;
    for (const auto& w : testutil::brute_ideal(c.group_ptr(), c.ring_ptr(), gens)) {
        std::size_t h = 0;
        std::uint64_t e = 0;
        for (Scalar x : w) {
            if (!x) continue;
            ++h;
            const std::int64_t q = static_cast<std::int64_t>(c.ring().size());
            const std::int64_t v = static_cast<std::int64_t>(x);
            const std::int64_t m = std::min(v, q - v);
            e += static_cast<std::uint64_t>(m * m);
        }
        if (h) {
            ham = std::min(ham, h);
            euc = std::min(euc, e);
        }
    }
    return {ham, euc};
}

}  // namespace

TEST(DistanceTest, HammingExamples) {
    auto c3 = make_cyclic(3);
    const RingPtr z4 = make_ring({2, 2, RingFlavor::IntegerResidue});
    for (auto mode : {HammingMode::Theorem, HammingMode::Exhaustive}) {
        EXPECT_EQ(min_hamming_r(ideal("2", c3, z4), mode), 1u);
        EXPECT_EQ(min_hamming_r(ideal("2+x+x^2", c3, z4), mode), 2u);
        EXPECT_EQ(min_hamming_r(RCode::zero(c3, z4), mode), std::nullopt);
    }
    EXPECT_EQ(min_hamming_support_scan(ideal("2+x+x^2", c3, z4)), 2u);
    EXPECT_EQ(min_hamming_support_scan(RCode::zero(c3, z4)), std::nullopt);
}

TEST(DistanceTest, EuclideanExamples) {
    auto c3 = make_cyclic(3);
    const RingPtr z4 = make_ring({2, 2, RingFlavor::IntegerResidue});
    const auto a = euclidean_weights(ideal("2", c3, z4));
    EXPECT_EQ(a.exhaustive, 4u);
    EXPECT_EQ(a.gamma_bound, 4u);
    const auto b = euclidean_weights(ideal("2+x+x^2", c3, z4));
    EXPECT_EQ(b.exhaustive, 2u);
    EXPECT_EQ(b.gamma_bound, 2u);
    const auto z = euclidean_weights(RCode::zero(c3, z4));
    EXPECT_EQ(z.exhaustive, std::nullopt);
    EXPECT_EQ(z.gamma_bound, std::nullopt);
    const RingPtr poly = make_ring({2, 2, RingFlavor::Polynomial});
    EXPECT_THROW(euclidean_weights(ideal("u", c3, poly)), Error);
}

TEST(DistanceTest, MatchesBruteForceOnBuiltCodes) {
    for (auto g : {make_cyclic(3), make_dihedral(3), make_cyclic(5)}) {
        for (const char* spec : {"Z:2^2", "Z:3^2", "Z:2^3"}) {
            const RingPtr r = make_ring(parse_ring_spec(spec));
            const auto inv = projective_code_inventory(g, r->p());
            for (const auto& ch : enumerate_chains(inv, r->ell())) {
                std::vector<GroupCodeF> codes;
                for (auto i : ch) codes.push_back(inv[i].code);
                const RCode c = build_code_from_chain(make_chain(r->spec(), codes), r);
                if (c.is_zero() || std::pow(double(r->p()), double(c.log_size())) > 4096) continue;
                const auto [ham, euc] = brute_weights(c);
                EXPECT_EQ(min_hamming_r(c, HammingMode::Theorem), ham);
                EXPECT_EQ(min_hamming_r(c, HammingMode::Exhaustive), ham);
                EXPECT_EQ(min_hamming_support_scan(c), ham);
                const auto ew = euclidean_weights(c);
                EXPECT_EQ(ew.exhaustive, euc);
                EXPECT_EQ(min_euclidean_short_vectors(c), euc);
                ASSERT_TRUE(ew.gamma_bound);
                EXPECT_GE(euc, *ew.gamma_bound);
            }
        }
    }
}

TEST(DistanceTest, FallbacksAgreeOnRandomIdeals) {
    std::mt19937_64 rng(31);
    const RingPtr z4 = make_ring({2, 2, RingFlavor::IntegerResidue});
    const RingPtr z9 = make_ring({3, 2, RingFlavor::IntegerResidue});
    for (auto g : {make_cyclic(6), make_dihedral(4)}) {
        for (const auto& r : {z4, z9}) {
            for (int t = 0; t < 6; ++t) {
                const RCode c = RCode::left_ideal(g, r, {testutil::random_r_element(g, r, rng)});
                if (c.log_size() > 12) continue;
                const auto ex = min_hamming_r(c, HammingMode::Exhaustive);
                EXPECT_EQ(min_hamming_support_scan(c), ex);
                EXPECT_EQ(min_euclidean_short_vectors(c), euclidean_weights(c).exhaustive);
            }
        }
    }
}
