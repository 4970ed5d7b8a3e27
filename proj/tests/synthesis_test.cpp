#include <gtest/gtest.h>

#include "support.hpp"
#include "transfinite/classic_ops.hpp"
#include "transfinite/hyperops.hpp"
#include "transfinite/synthesis.hpp"

using namespace transfinite;
using testing_support::O;

TEST(Synth, Examples) {
    EXPECT_EQ(synth(2, O("w"), O("w")), O("w^2"));
    EXPECT_EQ(synth(4, O("2"), O("w")), O("w"));
    EXPECT_EQ(synth(4, O("2"), O("w + 1")), O("w^2"));
    EXPECT_EQ(synth(4, O("w"), O("2")), O("w^w"));
    EXPECT_THROW(synth(4, O("w"), O("w")), NotRepresentable);
}

TEST(Synth, BaseCases) {
    EXPECT_EQ(synth(1, O("w"), O("3")), O("w + 3"));
    EXPECT_EQ(synth(2, O("w"), O("0")), O("0"));
    EXPECT_EQ(synth(3, O("w"), O("0")), O("1"));
    EXPECT_EQ(synth(7, O("w"), O("0")), O("1"));
    EXPECT_EQ(synth(7, O("w^w + 3"), O("1")), O("w^w + 3"));
}

TEST(Synth, LevelFourTowers) {
    // <w, k>_4 is a w-tower of height k.
    EXPECT_EQ(synth(4, O("w"), O("3")), O("w^(w^w)"));
    EXPECT_EQ(synth(4, O("w"), O("4")), O("w^(w^(w^w))"));
    // Head and tail: <<2, w>_4, <2, 3>_4>_3 = w^16.
    EXPECT_EQ(synth(4, O("2"), O("w + 3")), O("w^16"));
    EXPECT_EQ(synth(5, O("2"), O("w")), O("w"));
    EXPECT_EQ(synth(5, O("2"), O("w + 1")), O("w^w"));
}

TEST(Synth, LiteralRecursionMatchesClosedForms) {
    const char* xs[] = {"0", "1", "2", "w", "w + 1", "w*2 + 3", "w^2", "w^w + w", "w^(w + 1)*2"};
    for (unsigned n = 2; n <= 3; ++n) {
        SynthesisEngine literal(EvalBudget{}, n - 1);
        for (const char* a : xs)
            for (const char* b : xs) {
                const Ordinal expect = n == 2 ? mul(O(a), O(b)) : pow(O(a), O(b));
                EXPECT_EQ(literal.synth(n, O(a), O(b)), expect) << n << " " << a << " " << b;
            }
    }
}

TEST(Synth, FiniteArgumentsGiveHyperoperations) {
    for (unsigned n = 1; n <= 4; ++n)
        for (unsigned a = 0; a <= 3; ++a)
            for (unsigned b = 0; b <= 3; ++b)
                EXPECT_EQ(synth(n, from_natural(a), from_natural(b), EvalBudget{}, 1), from_natural(hyper(n, a, b)));
}

TEST(SupLimit, Examples) {
    EXPECT_EQ(sup_limit(3, O("2"), O("w")), O("w"));
    EXPECT_EQ(sup_limit(3, O("0"), O("w")), O("1"));
    EXPECT_THROW(sup_limit(4, O("2"), O("w^2")), NotRepresentable);
    EXPECT_THROW(sup_limit(3, O("2"), O("w + 1")), DomainError);
    EXPECT_THROW(sup_limit(3, O("2"), O("1")), DomainError);
}

TEST(SupLimit, SmallBasesStayInZeroAndOne) {
    // <0, k>_4 alternates 1, 0, 1, 0, ...; the supremum is 1.
    EXPECT_EQ(synth(4, O("0"), O("w")), O("1"));
    EXPECT_EQ(synth(4, O("0"), O("w + 1")), O("1"));  // <1, <0, 1>_4>_3 = 1^0
    EXPECT_EQ(synth(4, O("0"), O("3")), O("0"));
    EXPECT_EQ(synth(5, O("1"), O("w^w")), O("1"));
}

TEST(Synth, MoreSamplesDoNotChangeResults) {
    EvalBudget wide;
    wide.sup_samples = 16;
    for (const char* b : {"w", "w + 1", "w*2 + 1", "w^2", "w^w + 2"}) {
        for (const char* a : {"2", "3", "w", "w + 1"}) {
            for (unsigned n = 2; n <= 4; ++n) {
                std::string narrow_r, wide_r;
                try {
                    narrow_r = to_text(synth(n, O(a), O(b), EvalBudget{}, n - 1));
                } catch (const NotRepresentable&) {
                    narrow_r = "nr";
                }
                try {
                    wide_r = to_text(synth(n, O(a), O(b), wide, n - 1));
                } catch (const NotRepresentable&) {
                    wide_r = "nr";
                }
                EXPECT_EQ(narrow_r, wide_r) << n << " " << a << " " << b;
            }
        }
    }
}

TEST(Synth, BudgetExceededOnHugeNaturals) {
    EvalBudget b;
    b.max_bits = 256;
    EXPECT_THROW(synth(4, O("3"), O("4"), b), BudgetExceeded);
}

TEST(NaiveExt, CollapseAboveOmega) {
    EXPECT_EQ(naive_ext(2, O("w"), O("w")), O("w^2"));
    EXPECT_EQ(naive_ext(2, O("w"), O("w + 1")), O("w^2"));
    EXPECT_EQ(naive_ext(2, O("3"), O("5")), O("15"));
    EXPECT_EQ(naive_ext(2, O("w + 1"), O("w*2")), naive_ext(2, O("w + 1"), O("w")));
    EXPECT_EQ(naive_ext(2, O("w + 1"), O("w^2")), O("w^2"));
    // True ordinal multiplication keeps growing.
    EXPECT_LT(naive_ext(2, O("w"), O("w*2")), mul(O("w"), O("w*2")));
}

TEST(Distributes, Examples) {
    EXPECT_TRUE(distributes(2, O("w"), O("w + 1")));
    EXPECT_TRUE(distributes(3, O("w + 1"), O("w*2 + 1")));
    EXPECT_TRUE(distributes(4, O("2"), O("3")));
    EXPECT_TRUE(distributes(4, O("w"), O("3")));
    EXPECT_THROW(distributes(2, O("w"), O("w")), DomainError);
    EXPECT_THROW(distributes(1, O("w"), O("w + 1")), DomainError);
}

TEST(SynthesisEngine, MemoIsPerEngine) {
    SynthesisEngine a, b;
    EXPECT_EQ(a.synth(4, O("2"), O("w + 1")), b.synth(4, O("2"), O("w + 1")));
    EXPECT_THROW(a.synth(4, O("w"), O("w")), NotRepresentable);
    EXPECT_THROW(a.synth(4, O("w"), O("w")), NotRepresentable);  // cached outcome
    EXPECT_EQ(a.closed_levels(), 3u);
    EXPECT_EQ(SynthesisEngine(EvalBudget{}, 0).closed_levels(), 1u);
}
