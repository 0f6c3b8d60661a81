#include "shadow_markov/rational_linalg.hpp"
#include "shadow_markov/tripoly.hpp"
#include "shadow_markov/uniqueness.hpp"

#include "oracle.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace shadow_markov;

namespace {

const TriPoly A = TriPoly::variable(Slot::A);
const TriPoly B = TriPoly::variable(Slot::B);
const TriPoly C = TriPoly::variable(Slot::C);
const TriPoly ABC = A * B * C;

TriPoly random_poly(std::mt19937_64& rng, unsigned max_exp, int terms) {
    std::uniform_int_distribution<unsigned> e(0, max_exp);
    std::uniform_int_distribution<int> c(-9, 9);
    TriPoly p;
    for (int i = 0; i < terms; ++i) p.add_term(Monomial(e(rng), e(rng), e(rng)), Rational(c(rng), 1 + (i % 3)));
    return p;
}

}  // namespace

TEST(TriPolyTest, ArithmeticAndCancellation) {
    EXPECT_TRUE((A - A).is_zero());
    EXPECT_EQ((A + B) * (A - B), A * A - B * B);
    EXPECT_EQ(pow(A + 1, 3), A * A * A + TriPoly(3) * A * A + TriPoly(3) * A + 1);
    EXPECT_EQ(pow(A, 0), TriPoly(1));

    TriPoly p = TriPoly(2) * A;
    p.add_term(Monomial(1, 0, 0), -2);
    EXPECT_TRUE(p.is_zero());
    EXPECT_EQ(p.size(), 0U);
}

TEST(TriPolyTest, GradedLexText) {
    EXPECT_EQ(to_string(TriPoly(9) * B * B * C * C - TriPoly(6) * ABC + A * A), "9*B^2*C^2 - 6*A*B*C + A^2");
    EXPECT_EQ(to_string(TriPoly()), "0");
    EXPECT_EQ(to_string(TriPoly(-1) + TriPoly(Rational(1, 2)) * A), "1/2*A - 1");
}

TEST(TriPolyTest, Compose) {
    // (A + C)^2 with A -> B
    EXPECT_EQ(compose(pow(A + C, 2), Slot::A, B), pow(B + C, 2));
    EXPECT_EQ(compose(TriPoly(7), Slot::B, A * A), TriPoly(7));
}

TEST(SubstituteMutationTest, Examples) {
    EXPECT_EQ(substitute_mutation(ABC), TriPoly(3) * B * B * C * C - ABC);
    EXPECT_EQ(substitute_mutation(TriPoly(1)), TriPoly(1));
    EXPECT_EQ(substitute_mutation(A * A), A * A - TriPoly(6) * ABC + TriPoly(9) * B * B * C * C);
}

TEST(SubstituteMutationTest, OtherSlots) {
    EXPECT_EQ(substitute_mutation(B, Slot::B), TriPoly(3) * A * C - B);
    EXPECT_EQ(substitute_mutation(A, Slot::C), A);
}

TEST(InvarianceConstraintTest, Examples) {
    EXPECT_TRUE(invariance_constraint(ABC).is_zero());
    EXPECT_EQ(invariance_constraint(TriPoly(1)), TriPoly(2) * A - TriPoly(3) * B * C);
    EXPECT_TRUE(invariance_constraint(TriPoly()).is_zero());
    for (Slot s : kAllSlots) EXPECT_TRUE(invariance_constraint(ABC, s).is_zero());
}

TEST(InvarianceConstraintTest, SingleSlotAdmitsLinearInA) {
    // A*Q(B,C) passes the A-slot test, but not the B-slot test
    const TriPoly p = A * B * B * C;
    EXPECT_TRUE(invariance_constraint(p, Slot::A).is_zero());
    EXPECT_FALSE(invariance_constraint(p, Slot::B).is_zero());
}

TEST(InvarianceConstraintTest, HighPowersOfAAreNeverInvariant) {
    // A^i B^j C^k with i >= 2 leaves 3^i A B^(i+j) C^(i+k) in the constraint.
    for (std::uint32_t i = 2; i <= 5; ++i) {
        for (std::uint32_t j = 0; j <= 3; ++j) {
            for (std::uint32_t k = 0; k <= 3; ++k) {
                const TriPoly r = invariance_constraint(TriPoly::monomial(Monomial(i, j, k)));
                ASSERT_FALSE(r.is_zero());
                ASSERT_EQ(r.coefficient(Monomial(1, i + j, i + k)), Rational(boost::multiprecision::pow(BigInt(3), i)));
            }
        }
    }
}

TEST(UniquenessProperty, SubstitutionIsAnInvolution) {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 40; ++i) {
        const TriPoly p = random_poly(rng, 4, 6);
        for (Slot s : kAllSlots) ASSERT_EQ(substitute_mutation(substitute_mutation(p, s), s), p);
    }
}

TEST(UniquenessProperty, ConstraintIsLinear) {
    std::mt19937_64 rng(4);
    for (int i = 0; i < 20; ++i) {
        const TriPoly p = random_poly(rng, 3, 5), q = random_poly(rng, 3, 5);
        ASSERT_EQ(invariance_constraint(p + TriPoly(Rational(2, 3)) * q),
                  invariance_constraint(p) + TriPoly(Rational(2, 3)) * invariance_constraint(q));
    }
}

TEST(EchelonFormTest, NullspaceOfSmallSystem) {
    // x + y + z = 0, 2x + 2y + 2z = 0, y - z = 0 -> span{(-2, 1, 1)}
    EchelonForm e(3);
    EXPECT_TRUE(e.insert({1, 1, 1}));
    EXPECT_FALSE(e.insert({2, 2, 2}));
    EXPECT_TRUE(e.insert({0, 1, -1}));
    EXPECT_EQ(e.rank(), 2U);
    const auto ns = e.nullspace();
    ASSERT_EQ(ns.size(), 1U);
    EXPECT_EQ(ns[0], (RationalVector{-2, 1, 1}));
    EXPECT_THROW(e.insert({1, 2}), std::invalid_argument);
}

TEST(EchelonFormTest, RationalPivots) {
    EchelonForm e(2);
    e.insert({Rational(3, 7), Rational(1, 2)});
    const auto ns = e.nullspace();
    ASSERT_EQ(ns.size(), 1U);
    EXPECT_EQ(ns[0], (RationalVector{Rational(-7, 6), 1}));
}

TEST(ReduceModMarkovTest, Examples) {
    const TriPoly m = markov_form();
    EXPECT_TRUE(reduce_mod_markov(m).is_zero());
    EXPECT_TRUE(reduce_mod_markov(ABC * m * m + B * m).is_zero());
    EXPECT_EQ(reduce_mod_markov(A * A), TriPoly(3) * ABC - B * B - C * C);
    EXPECT_EQ(reduce_mod_markov(ABC + B), ABC + B);
}

TEST(ReduceModMarkovTest, IsLinearAndIdempotentWithLowADegree) {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 20; ++i) {
        const TriPoly p = random_poly(rng, 4, 6), q = random_poly(rng, 4, 6);
        const TriPoly r = reduce_mod_markov(p);
        for (const auto& [mono, c] : r.terms()) ASSERT_LE(mono.exp[0], 1U);
        ASSERT_EQ(reduce_mod_markov(r), r);
        ASSERT_EQ(reduce_mod_markov(p + q), r + reduce_mod_markov(q));
        // p and its remainder differ by a multiple of the form
        ASSERT_TRUE(reduce_mod_markov(p - r + q * markov_form()).is_zero());
    }
}

TEST(InvarianceConstraintTest, MarkovFormIsInvariant) {
    for (Slot s : kAllSlots) {
        EXPECT_EQ(substitute_mutation(markov_form(), s), markov_form());
        EXPECT_TRUE(invariance_constraint(ABC * markov_form(), s).is_zero());
    }
}

TEST(CertifyUniquenessTest, AllSlotsGiveOnlyABC) {
    for (std::uint32_t d = 1; d <= 3; ++d) {
        const InvarianceReport r = certify_uniqueness(d);
        EXPECT_EQ(r.unknowns, (d + 1) * (d + 1) * (d + 1));
        EXPECT_EQ(r.nullspace_dimension, 1U) << "D=" << d;
        ASSERT_EQ(r.basis.size(), 1U);
        EXPECT_EQ(r.basis[0], ABC);
        EXPECT_GE(r.unknowns - r.rank, r.nullspace_dimension);
    }
}

TEST(CertifyUniquenessTest, ExactIdentityAlsoAdmitsABCTimesMarkovForm) {
    EXPECT_EQ(certify_uniqueness(1).identity_nullspace_dimension, 1U);
    EXPECT_EQ(certify_uniqueness(2).identity_nullspace_dimension, 1U);
    const InvarianceReport r = certify_uniqueness(3);
    ASSERT_EQ(r.identity_nullspace_dimension, 2U);
    for (const auto& p : r.identity_basis) {
        for (Slot s : kAllSlots) EXPECT_TRUE(invariance_constraint(p, s).is_zero());
    }
    // the extra direction vanishes modulo the form
    const TriPoly extra = r.identity_basis[0] == ABC ? r.identity_basis[1] : r.identity_basis[0];
    EXPECT_EQ(extra, TriPoly(Rational(-1, 3)) * ABC * markov_form());
    EXPECT_TRUE(reduce_mod_markov(extra).is_zero());
}

TEST(CertifyUniquenessTest, SingleSlotBasisSatisfiesASlotModuloForm) {
    for (std::uint32_t d = 1; d <= 3; ++d) {
        const InvarianceReport r = certify_uniqueness(d, SlotMode::SingleSlot);
        EXPECT_GT(r.nullspace_dimension, 1U) << "D=" << d;
        for (const auto& p : r.basis) {
            ASSERT_EQ(reduce_mod_markov(p), p);
            EXPECT_TRUE(reduce_mod_markov(invariance_constraint(p, Slot::A)).is_zero());
        }
        for (const auto& p : r.identity_basis) EXPECT_TRUE(invariance_constraint(p, Slot::A).is_zero());
    }
}

TEST(CertifyUniquenessTest, ExactIdentityMatchesIntegerEvaluationOracle) {
    // rank from random integer points + Bareiss, independent of TriPoly
    for (unsigned d = 1; d <= 2; ++d) {
        const std::size_t unknowns = (d + 1) * (d + 1) * (d + 1);
        EXPECT_EQ(oracle::invariant_dimension(d, {0, 1, 2}, 2 * unknowns),
                  certify_uniqueness(d).identity_nullspace_dimension);
        EXPECT_EQ(oracle::invariant_dimension(d, {0}, 2 * unknowns),
                  certify_uniqueness(d, SlotMode::SingleSlot).identity_nullspace_dimension);
    }
}

TEST(CertifyUniquenessTest, QuotientMatchesMarkovPointOracle) {
    // evaluation at Markov triples mod a prime, independent of TriPoly
    for (unsigned d = 1; d <= 4; ++d) {
        EXPECT_EQ(oracle::invariant_dimension_on_surface(d, {0, 1, 2}), certify_uniqueness(d).nullspace_dimension)
            << "D=" << d;
    }
    for (unsigned d = 1; d <= 3; ++d) {
        EXPECT_EQ(oracle::invariant_dimension_on_surface(d, {0}),
                  certify_uniqueness(d, SlotMode::SingleSlot).nullspace_dimension)
            << "D=" << d;
    }
}

TEST(CertifyUniquenessTest, MoreSlotsNeverEnlargeTheNullspace) {
    for (std::uint32_t d = 1; d <= 3; ++d) {
        EXPECT_LE(certify_uniqueness(d).nullspace_dimension, certify_uniqueness(d, SlotMode::SingleSlot).nullspace_dimension);
    }
}

TEST(CertifyUniquenessTest, RejectsDegreeZero) { EXPECT_THROW(certify_uniqueness(0), std::invalid_argument); }
