#include "shadow_markov/init_space.hpp"

#include "oracle.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace shadow_markov;

TEST(ShadowCoefficientsTest, Trunk) {
    EXPECT_EQ(shadow_coefficients(TreePath("")), (ShadowCoefficients{-2, 2, 2}));
}

TEST(ShadowCoefficientsTest, MatchRecurrenceOracle) {
    for (const char* w : {"L", "R", "LR", "RLL", "LLRLR"}) {
        const ShadowCoefficients k = shadow_coefficients(TreePath(w));
        EXPECT_EQ(k.u, oracle::newest_at({1, 0, 0}, w).alpha) << w;
        EXPECT_EQ(k.v, oracle::newest_at({0, 1, 0}, w).alpha) << w;
        EXPECT_EQ(k.t, oracle::newest_at({0, 0, 1}, w).alpha) << w;
    }
    EXPECT_EQ(shadow_coefficients(TreePath("L")).apply({0, 1, 1}), BigInt(13));
}

TEST(ShadowCoefficientsTest, SeedOnesGivesMarkovNumber) {
    for (const auto& n : subtree({1, 1, 1}, 5)) {
        const ShadowCoefficients k = shadow_coefficients(n.path);
        ASSERT_EQ(k.u + k.v + k.t, n.newest.real) << n.path.str();
    }
}

TEST(DecomposeTest, BasisSeeds) {
    EXPECT_EQ(decompose({0, 1, 1}), (BasisCoefficients{1, 0, 0}));
    EXPECT_EQ(decompose({1, 1, 1}), (BasisCoefficients{0, 1, 0}));
    EXPECT_EQ(decompose({0, 1, 0}), (BasisCoefficients{0, 0, 1}));
}

TEST(DecomposeTest, GeneralSeedRecombinesAndPredictsShadows) {
    const InitialTriple seed{2, 5, 3};
    const BasisCoefficients c = decompose(seed);
    EXPECT_EQ(c, (BasisCoefficients{1, 2, 2}));
    EXPECT_EQ(recombine(c), seed);

    const auto& basis = seed_basis();
    const auto target = subtree(seed, 3);
    const auto t0 = subtree(basis[0], 3), t1 = subtree(basis[1], 3), t2 = subtree(basis[2], 3);
    for (std::size_t i = 0; i < target.size(); ++i) {
        ASSERT_EQ(target[i].newest.shadow,
                  c.x * t0[i].newest.shadow + c.y * t1[i].newest.shadow + c.z * t2[i].newest.shadow);
    }
}

TEST(PositivityTest, Seed011IsPositive) {
    const PositivityReport r = check_positivity({0, 1, 1}, 10);
    EXPECT_EQ(r.verdict, Verdict::AllPositive);
    EXPECT_EQ(r.depth, 10U);
}

TEST(PositivityTest, SeedOnesIsPositive) { EXPECT_EQ(check_positivity({1, 1, 1}, 10).verdict, Verdict::AllPositive); }

TEST(PositivityTest, Seed010GoesNegative) {
    const PositivityReport r = check_positivity({0, 1, 0}, 4);
    EXPECT_EQ(r.verdict, Verdict::NegativeShadow);
    EXPECT_EQ(r.violation_path.str(), "RRR");
    EXPECT_EQ(r.violation_value, DualInt(34, -10));
    // the violation is invisible at depth 2
    EXPECT_EQ(check_positivity({0, 1, 0}, 2).verdict, Verdict::AllPositive);
}

TEST(PositivityTest, ZeroShadowIsFlaggedSeparately) {
    // trunk shadow 2*beta1 + 2*gamma1 - 2*alpha1 = 0
    const PositivityReport r = check_positivity({1, 0, 1}, 3);
    EXPECT_EQ(r.verdict, Verdict::ZeroShadow);
    EXPECT_TRUE(r.violation_path.empty());
    EXPECT_EQ(r.violation_value, DualInt(2, 0));
}

TEST(PositivityTest, SearchCoversCubeDeterministically) {
    const auto one = positivity_search(1, 4, 1);
    const auto many = positivity_search(1, 4, 4);
    ASSERT_EQ(one.size(), 27U);
    EXPECT_EQ(one, many);
    EXPECT_EQ(one.front().seed, InitialTriple(-1, -1, -1));
    EXPECT_EQ(one.back().seed, InitialTriple(1, 1, 1));
    for (const auto& r : one) EXPECT_EQ(r, check_positivity(r.seed, 4));
    EXPECT_THROW(positivity_search(-1, 2), std::invalid_argument);
}

TEST(InitSpaceProperty, ShadowsAreLinearInTheSeed) {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<long long> d(-40, 40);
    for (int i = 0; i < 20; ++i) {
        const InitialTriple s1{d(rng), d(rng), d(rng)}, s2{d(rng), d(rng), d(rng)};
        const BigInt m = d(rng), n = d(rng);
        const InitialTriple mix = m * s1 + n * s2;
        const auto t1 = subtree(s1, 5), t2 = subtree(s2, 5), tm = subtree(mix, 5);
        for (std::size_t k = 0; k < tm.size(); ++k) {
            ASSERT_EQ(tm[k].newest.real, t1[k].newest.real);
            ASSERT_EQ(tm[k].newest.shadow, m * t1[k].newest.shadow + n * t2[k].newest.shadow);
        }
    }
}
