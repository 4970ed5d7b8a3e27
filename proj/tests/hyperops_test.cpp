#include <gtest/gtest.h>

#include "transfinite/hyperops.hpp"

using namespace transfinite;

TEST(Hyper, Examples) {
    EXPECT_EQ(hyper(2, 7, 6), 42);
    EXPECT_EQ(hyper(3, 0, 0), 1);
    EXPECT_EQ(hyper(4, 2, 3), 16);
    EXPECT_EQ(hyper(1, 4, 9), 13);
    EXPECT_EQ(hyper(5, 2, 3), 65536);
    EXPECT_EQ(hyper(4, 3, 0), 1);
    EXPECT_EQ(hyper(2, 3, 0), 0);
}

TEST(Hyper, TetrationOfThree) {
    const Natural expect = boost::multiprecision::pow(Natural(3), 27);
    EXPECT_EQ(expect, Natural("7625597484987"));
    EXPECT_EQ(hyper(4, 3, 3), expect);
    EXPECT_EQ(hyper_by_definition(4, 3, 2), 27);
}

TEST(Hyper, ByDefinitionMatchesClosedForms) {
    for (unsigned n = 1; n <= 4; ++n)
        for (unsigned a = 0; a <= 4; ++a)
            for (unsigned b = 0; b <= 3; ++b) EXPECT_EQ(hyper_by_definition(n, a, b), hyper(n, a, b)) << n << a << b;
}

TEST(Hyper, FixedPointsEndIterationEarly) {
    // [1, b]_n = 1 and [2, 2]_n = 4 for n >= 2, for any b and n.
    EXPECT_EQ(hyper(50, 1, 1000000), 1);
    EXPECT_EQ(hyper(1000, 2, 2), 4);
    EXPECT_EQ(hyper(6, 0, 7), 0);
    EXPECT_EQ(hyper(7, 0, 8), 1);
}

TEST(Hyper, BudgetStopsRunawayGrowth) {
    EvalBudget b;
    b.max_bits = 1024;
    EXPECT_THROW(hyper(4, 3, 4, b), BudgetExceeded);
    EXPECT_THROW(hyper(5, 3, 3, b), BudgetExceeded);
    EXPECT_THROW(hyper(3, 2, 5000, b), SizeBudgetExceeded);
}

TEST(Hyper, RightIdentity) {
    EXPECT_EQ(right_identity(1), 0);
    EXPECT_EQ(right_identity(2), 1);
    EXPECT_EQ(right_identity(3), 1);
    for (unsigned n = 1; n <= 5; ++n)
        for (unsigned a = 0; a <= 5; ++a) EXPECT_EQ(hyper(n, a, right_identity(n)), a);
}

TEST(Hyper, ZeroIndexIsRejected) { EXPECT_THROW(hyper(0, 1, 1), DomainError); }

TEST(LeftHyper, RecoversMultiplicationAndExponentiation) {
    EXPECT_EQ(left_hyper(2, 3, 4), 12);
    EXPECT_EQ(left_hyper(3, 2, 5), 32);
    EXPECT_EQ(left_hyper(3, 5, 0), 1);
    for (unsigned a = 0; a <= 10; ++a)
        for (unsigned b = 0; b <= 10; ++b) {
            EXPECT_EQ(left_hyper(2, a, b), hyper(2, a, b));
            EXPECT_EQ(left_hyper(3, a, b), hyper(3, a, b));
        }
}

TEST(LeftHyper, BreaksDownAtLevelFour) {
    // Starting from 1, every step computes 1^a = 1.
    EXPECT_EQ(left_hyper(4, 2, 3), 1);
    EXPECT_NE(left_hyper(4, 2, 3), hyper(4, 2, 3));
    EXPECT_EQ(hyper(4, 3, 3), Natural("7625597484987"));
}

TEST(NoLeftIdentity, Witnesses) {
    EXPECT_EQ(no_left_identity_witness(2), 2);
    EXPECT_EQ(no_left_identity_witness(1), 2);
    EXPECT_EQ(no_left_identity_witness(0), 2);
    for (unsigned e = 0; e <= 1000; ++e) {
        const Natural a = no_left_identity_witness(e);
        Natural p = 1;
        for (Natural i = 0; i < a; ++i) p *= e;
        EXPECT_NE(p, a) << e;
    }
}
