#include <gtest/gtest.h>

#include <random>

#include "support.hpp"
#include "transfinite/calculator.hpp"
#include "transfinite/notation.hpp"

using namespace transfinite;
using testing_support::O;

TEST(Parse, Structure) {
    EXPECT_EQ(describe(*parse("w^(w+1)*3 + 5")), "Add(Mul(Pow(w, Add(w, 1)), 3), 5)");
    EXPECT_EQ(describe(*parse("H(4,2,3)")), "Hyper(4, 2, 3)");
    EXPECT_EQ(describe(*parse("S(2, w, w)")), "Synth(2, w, w)");
    EXPECT_EQ(describe(*parse("2^3^2")), "Pow(2, Pow(3, 2))");
    EXPECT_EQ(describe(*parse("1+2*3")), "Add(1, Mul(2, 3))");
    EXPECT_EQ(describe(*parse("L(3, 2, 5)")), "LeftHyper(3, 2, 5)");
    EXPECT_EQ(describe(*parse("N(2, w, w+1)")), "NaiveExt(2, w, Add(w, 1))");
}

TEST(Parse, Errors) {
    auto position = [](const char* text) -> long {
        try {
            parse(text);
        } catch (const ParseError& e) {
            return static_cast<long>(e.position());
        }
        return -1;
    };
    EXPECT_EQ(position("w +"), 3);
    EXPECT_EQ(position("(w"), 2);
    EXPECT_EQ(position("w x"), 2);
    EXPECT_EQ(position("S(0, w, w)"), 2);
    EXPECT_EQ(position("H(2, w, 3)"), 5);
    EXPECT_EQ(position(""), 0);
    EXPECT_EQ(position("w)"), 1);
}

TEST(Eval, Examples) {
    EXPECT_EQ(O("1 + w"), O("w"));
    EXPECT_EQ(to_text(O("H(4,3,3)")), "7625597484987");
    EXPECT_THROW(O("S(4, w, w)"), NotRepresentable);
    EXPECT_EQ(O("L(3, 2, 5)"), O("32"));
    EXPECT_EQ(O("N(2, w, w + 1)"), O("w^2"));
    EXPECT_EQ(O("2^w"), O("w"));
    EXPECT_EQ(O("(w+1)^2"), O("w^2 + w + 1"));
}

TEST(Format, Text) {
    EXPECT_EQ(to_text(O("w^w*2 + w + 3")), "w^w*2 + w + 3");
    EXPECT_EQ(to_text(Ordinal{}), "0");
    EXPECT_EQ(to_text(O("w^(w+1)")), "w^(w + 1)");
    EXPECT_EQ(to_text(O("w*5")), "w*5");
    EXPECT_EQ(to_text(O("w^(w^w)")), "w^(w^w)");
    EXPECT_EQ(to_text(O("w^3")), "w^3");
}

TEST(Format, Json) {
    EXPECT_EQ(format(O("w + 2"), FormatStyle::Json),
              R"({"terms":[{"exp":{"terms":[{"exp":{"terms":[]},"coeff":"1"}]},"coeff":"1"},{"exp":{"terms":[]},"coeff":"2"}]})");
    EXPECT_EQ(format(Ordinal{}, FormatStyle::Json), R"({"terms":[]})");
}

TEST(Format, RoundTripsThroughTheParser) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> pick(0, 5);
    for (int i = 0; i < 500; ++i) {
        // Random sums of random powers, built with the closed-form operations.
        Ordinal x;
        for (int t = pick(rng); t >= 0; --t) {
            Ordinal e = from_natural(pick(rng));
            if (pick(rng) == 0) e = pow(Ordinal::omega(), add(e, from_natural(pick(rng))));
            x = add(x, mul(omega_power(e), from_natural(1 + pick(rng))));
        }
        EXPECT_EQ(O(to_text(x)), x) << to_text(x);
    }
}

TEST(Calculator, ExitCodes) {
    EXPECT_EQ(evaluate_text("H(4,3,3)").exit_code, kExitOk);
    EXPECT_EQ(evaluate_text("H(4,3,3)").output, "7625597484987");
    EXPECT_EQ(evaluate_text("S(4,2,w+1)").output, "w^2");
    EXPECT_EQ(evaluate_text("w +").exit_code, kExitParse);
    EXPECT_EQ(evaluate_text("S(4,w,w)").exit_code, kExitNotRepresentable);
    EvalBudget small;
    small.max_bits = 40;  // 3^^3 needs 43 bits
    EXPECT_EQ(evaluate_text("H(4,3,3)", FormatStyle::Text, small).exit_code, kExitBudget);
    EXPECT_EQ(evaluate_text("2^200", FormatStyle::Text, small).exit_code, kExitBudget);
}

TEST(Calculator, BudgetFromEnvironment) {
    setenv("TRANSFINITE_BUDGET_BITS", "123", 1);
    EXPECT_EQ(budget_from_environment().max_bits, 123u);
    setenv("TRANSFINITE_BUDGET_BITS", "abc", 1);
    EXPECT_THROW(budget_from_environment(), DomainError);
    unsetenv("TRANSFINITE_BUDGET_BITS");
    EXPECT_EQ(budget_from_environment().max_bits, EvalBudget{}.max_bits);
}
