#include <gtest/gtest.h>

#include "chaincodes/error.hpp"
#include "chaincodes/idempotent_search.hpp"
#include "chaincodes/literals.hpp"
#include "test_util.hpp"

using namespace chaincodes;

namespace {

FAlgebraElement el(const char* text, const GroupPtr& g, Coeff p = 2) { return parse_element(text, g, p); }

// Brute-force minimum weight over every codeword (independent of the library's strategies).
std::optional<std::size_t> brute_distance(const GroupCodeF& c) {
    if (c.dim() == 0) return std::nullopt;
    std::size_t total = 1;
    for (std::size_t i = 0; i < c.dim(); ++i) total *= c.p();
    std::size_t best = c.length();
    for (std::size_t m = 1; m < total; ++m) {
        std::vector<Coeff> w(c.length(), 0);
        std::size_t r = m;
        for (std::size_t i = 0; i < c.dim(); ++i, r /= c.p())
            for (std::size_t k = 0; k < c.length(); ++k) w[k] = (w[k] + (r % c.p()) * c.basis()[i][k]) % c.p();
        best = std::min<std::size_t>(best, std::count_if(w.begin(), w.end(), [](Coeff x) { return x; }));
    }
    return best;
}

std::vector<FAlgebraElement> idempotents(const GroupPtr& g, Coeff p) { return enumerate_idempotents_exhaustive(g, p); }

}  // namespace

TEST(FieldCodesTest, CodeFromIdempotentExamples) {
    auto c3 = make_cyclic(3);
    EXPECT_EQ(code_from_idempotent(FAlgebraElement::zero(c3, 2)).dim(), 0u);
    const auto even = code_from_idempotent(el("x+x^2", c3));
    EXPECT_EQ(even.dim(), 2u);
    for (const char* w : {"x+x^2", "1+x^2", "1+x"}) EXPECT_TRUE(even.contains(el(w, c3))) << w;
    EXPECT_FALSE(even.contains(el("1", c3)));
    EXPECT_EQ(code_from_idempotent(FAlgebraElement::one(c3, 2)).dim(), 3u);
}

TEST(FieldCodesTest, DualExamples) {
    auto c3 = make_cyclic(3);
    const auto e = el("x+x^2", c3);
    const auto dual = dual_code_f(code_from_idempotent(e), e);
    EXPECT_EQ(dual, code_from_idempotent(el("1+x+x^2", c3)));
    EXPECT_EQ(dual.dim(), 1u);
    EXPECT_EQ(dual_code_f(GroupCodeF::zero(c3, 2)), GroupCodeF::full(c3, 2));
    EXPECT_EQ(dual_code_f(GroupCodeF::full(c3, 2)), GroupCodeF::zero(c3, 2));
}

TEST(FieldCodesTest, ProjectivityWitnessExamples) {
    auto c3 = make_cyclic(3);
    const auto even = code_from_idempotent(el("x+x^2", c3));
    const auto w = projectivity_witness(even);
    ASSERT_TRUE(w);
    EXPECT_EQ(*w, el("x+x^2", c3));
    for (std::size_t i = 0; i < even.dim(); ++i) EXPECT_EQ(alg_mul(even.row(i), *w), even.row(i));

    auto c2 = make_cyclic(2);
    EXPECT_FALSE(projectivity_witness(GroupCodeF::left_ideal(c2, 2, {el("1+x", c2)})));
    const auto z = projectivity_witness(GroupCodeF::zero(c3, 2));
    ASSERT_TRUE(z);
    EXPECT_TRUE(z->is_zero());
}

TEST(FieldCodesTest, DistanceExamples) {
    auto c3 = make_cyclic(3);
    EXPECT_EQ(min_hamming_distance_f(code_from_idempotent(el("1+x+x^2", c3))), 3u);
    EXPECT_EQ(min_hamming_distance_f(code_from_idempotent(el("x+x^2", c3))), 2u);
    EXPECT_FALSE(min_hamming_distance_f(GroupCodeF::zero(c3, 2)));
}

TEST(FieldCodesTest, SelfOrthogonalExamples) {
    auto c2 = make_cyclic(2);
    EXPECT_TRUE(is_self_orthogonal_f(GroupCodeF::left_ideal(c2, 2, {el("1+x", c2)})));
    auto c3 = make_cyclic(3);
    EXPECT_FALSE(is_self_orthogonal_f(code_from_idempotent(el("1+x+x^2", c3))));
    EXPECT_TRUE(is_self_orthogonal_f(GroupCodeF::zero(c3, 2)));
}

TEST(FieldCodesTest, FromRowsRejectsNonIdeals) {
    auto c3 = make_cyclic(3);
    EXPECT_THROW(GroupCodeF::from_rows(c3, 2, {{1, 0, 0}}), Error);
    EXPECT_NO_THROW(GroupCodeF::from_rows(c3, 2, {{1, 1, 1}}));
}

TEST(FieldCodesTest, Canonicity) {
    std::mt19937_64 rng(5);
    for (auto g : {make_dihedral(3), make_cyclic(6), make_dihedral(4)}) {
        for (Coeff p : {2u, 3u}) {
            for (int t = 0; t < 10; ++t) {
                auto a = testutil::random_element(g, p, rng), b = testutil::random_element(g, p, rng);
                const auto c1 = GroupCodeF::left_ideal(g, p, {a, b});
                // Same ideal from a different generating set.
                const auto h = FAlgebraElement::basis(g, p, static_cast<Elem>(rng() % g->order()));
                const auto c2 = GroupCodeF::left_ideal(g, p, {a + b, alg_mul(h, b), a, b.scaled(p - 1)});
                EXPECT_EQ(c1, c2);
                EXPECT_EQ(c1.basis(), c2.basis());
                for (std::size_t i = 1; i < c1.pivots().size(); ++i) EXPECT_LT(c1.pivots()[i - 1], c1.pivots()[i]);
            }
        }
    }
}

TEST(FieldCodesTest, DualIsInvolutionAndFormulaAgrees) {
    for (const auto& g : testutil::small_groups(12)) {
        for (Coeff p : {2u, 3u}) {
            if (p == 3 && g->order() > 8) continue;
            for (const auto& e : idempotents(g, p)) {
                const auto c = code_from_idempotent(e);
                const auto d = dual_code_f(c, e);  // throws if the formula and the nullspace disagree
                EXPECT_EQ(c.dim() + d.dim(), g->order());
                EXPECT_EQ(dual_code_f(d), c);
            }
        }
    }
}

TEST(FieldCodesTest, SelfOrthogonalIffEStarEVanishes) {
    for (const auto& g : testutil::small_groups(12))
        for (const auto& e : idempotents(g, 2))
            EXPECT_EQ(is_self_orthogonal_f(code_from_idempotent(e)), alg_mul(e, star(e)).is_zero()) << format_element(e);
}

TEST(FieldCodesTest, NoProjectiveCodeIsSelfDual) {
    for (const auto& g : testutil::small_groups(16)) {
        if (g->order() % 2) continue;
        for (const auto& e : idempotents(g, 2)) {
            const auto c = code_from_idempotent(e);
            EXPECT_FALSE(c == dual_code_f(c, e)) << g->spec() << " " << format_element(e);
        }
    }
}

TEST(FieldCodesTest, SubcodeFollowsIdempotentOrder) {
    for (auto g : {make_dihedral(3), make_cyclic(7), make_dihedral(4)}) {
        const auto ids = idempotents(g, 2);
        for (const auto& a : ids)
            for (const auto& b : ids)
                if (alg_mul(a, b) == a) EXPECT_TRUE(code_from_idempotent(b).contains(code_from_idempotent(a)));
    }
}

TEST(FieldCodesTest, WitnessIsRightIdentity) {
    for (const auto& g : testutil::small_groups(10))
        for (const auto& e : idempotents(g, 2)) {
            const auto c = code_from_idempotent(e);
            const auto w = projectivity_witness(c);
            ASSERT_TRUE(w);
            EXPECT_TRUE(is_idempotent(*w));
            EXPECT_EQ(code_from_idempotent(*w), c);
        }
}

TEST(FieldCodesTest, DistanceStrategiesAgreeWithBruteForce) {
    std::mt19937_64 rng(17);
    for (const auto& g : testutil::small_groups(14)) {
        for (Coeff p : {2u, 3u}) {
            for (int t = 0; t < 4; ++t) {
                const auto c = GroupCodeF::left_ideal(g, p, {testutil::random_element(g, p, rng)});
                if (c.dim() > 12) continue;
                const auto want = brute_distance(c);
                EXPECT_EQ(min_hamming_distance_f(c, {}, DistanceStrategy::Generator), want);
                EXPECT_EQ(min_hamming_distance_f(c, {}, DistanceStrategy::Auto), want);
                if (p == 2) EXPECT_EQ(min_hamming_distance_f(c, {}, DistanceStrategy::ParityCheck), want);
            }
        }
    }
}

TEST(FieldCodesTest, DistanceIndependentOfWorkers) {
    auto g = make_dihedral(11);
    for (const auto& e : enumerate_idempotents_exhaustive(g, 2)) {
        const auto c = code_from_idempotent(e);
        DistanceOptions one, four;
        four.workers = 4;
        EXPECT_EQ(min_hamming_distance_f(c, one, DistanceStrategy::Generator),
                  min_hamming_distance_f(c, four, DistanceStrategy::Generator));
        EXPECT_EQ(min_hamming_distance_f(c, one, DistanceStrategy::ParityCheck),
                  min_hamming_distance_f(c, four, DistanceStrategy::ParityCheck));
    }
}

TEST(FieldCodesTest, DistanceCutoff) {
    auto g = make_cyclic(40);
    const auto c = GroupCodeF::left_ideal(g, 2, {parse_element("1+x", g, 2)});  // dim 39
    DistanceOptions tight;
    tight.cutoff_log2 = 4;
    try {
        min_hamming_distance_f(c, tight, DistanceStrategy::Generator);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::BudgetExceeded);
    }
    EXPECT_EQ(min_hamming_distance_f(c), 2u);
}

TEST(FieldCodesTest, EuclideanWeight) {
    auto c3 = make_cyclic(3);
    EXPECT_EQ(min_euclidean_weight_f(code_from_idempotent(el("x+x^2", c3))), 2u);
    // Over F_5 the word 2 has weight 4, the word 1 weight 1.
    const auto full5 = GroupCodeF::full(c3, 5);
    EXPECT_EQ(min_euclidean_weight_f(full5), 1u);
    const auto rep5 = GroupCodeF::left_ideal(c3, 5, {parse_element("2+2x+2x^2", c3, 5)});
    EXPECT_EQ(min_euclidean_weight_f(rep5), 3u);
}
