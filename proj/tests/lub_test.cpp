#include <gtest/gtest.h>

#include <vector>

#include "support.hpp"
#include "transfinite/lub.hpp"

using namespace transfinite;
using testing_support::O;

namespace {

std::vector<Ordinal> seq(std::initializer_list<const char*> xs) {
    std::vector<Ordinal> out;
    for (const char* x : xs) out.push_back(O(x));
    return out;
}

}  // namespace

TEST(InferLub, ConstantTail) {
    const auto inf = infer_lub_detailed(seq({"5", "5", "5", "5"}));
    EXPECT_EQ(inf.rule, LubRule::ConstantTail);
    EXPECT_EQ(inf.value, O("5"));
    // Earlier, larger samples are kept by the join.
    EXPECT_EQ(infer_lub(seq({"7", "1", "1", "1"})), O("7"));
}

TEST(InferLub, CoefficientGrowth) {
    const auto inf = infer_lub_detailed(seq({"w", "w*2", "w*3", "w*4"}));
    EXPECT_EQ(inf.rule, LubRule::CoefficientGrowth);
    EXPECT_EQ(inf.value, O("w^2"));
    EXPECT_EQ(infer_lub(seq({"0", "2", "4", "6"})), O("w"));
}

TEST(InferLub, ExponentGrowth) {
    const auto inf = infer_lub_detailed(seq({"1", "w", "w^2", "w^3"}));
    EXPECT_EQ(inf.rule, LubRule::ExponentGrowth);
    EXPECT_EQ(inf.value, O("w^w"));
    EXPECT_EQ(infer_lub(seq({"w^(w*1)", "w^(w*2)", "w^(w*3)"})), O("w^(w^2)"));
}

TEST(InferLub, PrefixPeel) {
    const auto inf = infer_lub_detailed(seq({"w^2 + 1", "w^2 + 2", "w^2 + 3", "w^2 + 4"}));
    EXPECT_EQ(inf.rule, LubRule::PrefixPeel);
    EXPECT_EQ(inf.prefix, O("w^2"));
    EXPECT_EQ(inf.value, O("w^2 + w"));
}

TEST(InferLub, TowerGrowthIsNotRepresentable) {
    const auto samples = seq({"w", "w^w", "w^(w^w)"});
    EXPECT_EQ(infer_lub_detailed(samples).rule, LubRule::TowerGrowth);
    EXPECT_THROW(infer_lub(samples), NotRepresentable);
}

TEST(InferLub, IrregularStartIsSkipped) {
    EXPECT_EQ(infer_lub(seq({"w^5", "3", "w", "w*2", "w*3"})), O("w^5"));
    EXPECT_EQ(infer_lub(seq({"0", "1", "w", "w*2", "w*3", "w*4"})), O("w^2"));
}

TEST(InferLub, NoPatternFailsLoudly) {
    EXPECT_THROW(infer_lub(seq({"1", "0", "1", "0"})), NoPatternError);
    EXPECT_THROW(infer_lub(seq({"1", "2"})), NoPatternError);
    try {
        infer_lub(seq({"3", "1", "2", "0"}));
        FAIL() << "expected NoPatternError";
    } catch (const NoPatternError& e) {
        EXPECT_EQ(e.samples().size(), 4u);
    }
}

TEST(SupBySampling, StopsEarlyOnceStable) {
    int calls = 0;
    EvalBudget b;
    b.sup_samples = 50;
    const Ordinal seeds[] = {Ordinal{}};
    const Ordinal r = sup_by_sampling(
        O("w"), [&](const Ordinal& g) { ++calls; return add(O("w"), g); }, seeds, b);
    EXPECT_EQ(r, O("w*2"));
    EXPECT_LE(calls, 6);
}

TEST(SupBySampling, FailureCarriesTheTrace) {
    const Ordinal seeds[] = {Ordinal{}};
    try {
        sup_by_sampling(
            O("w"), [](const Ordinal& g) { return from_natural(g.is_zero() ? 0 : (g.finite_value() % 2)); },
            seeds, EvalBudget{});
        FAIL() << "expected BudgetExceeded";
    } catch (const BudgetExceeded& e) {
        EXPECT_NE(std::string(e.what()).find("[0, 1, 0, 1"), std::string::npos) << e.what();
    }
}

TEST(SupBySampling, SeedsJoinTheResult) {
    const Ordinal seeds[] = {O("w^9")};
    EXPECT_EQ(sup_by_sampling(O("w"), [](const Ordinal& g) { return g; }, seeds, EvalBudget{}), O("w^9"));
}
