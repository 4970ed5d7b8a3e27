#include <gtest/gtest.h>

#include "support.hpp"
#include "transfinite/ordinal.hpp"

using namespace transfinite;
using testing_support::O;

TEST(Ordinal, NaturalConstruction) {
    EXPECT_TRUE(from_natural(0).is_zero());
    EXPECT_EQ(from_natural(0).term_count(), 0u);

    const Ordinal five = from_natural(5);
    ASSERT_EQ(five.term_count(), 1u);
    EXPECT_TRUE(five.leading().exponent.is_zero());
    EXPECT_EQ(five.leading().coefficient, 5);
    EXPECT_EQ(repeated_term_count(five), 5);

    EXPECT_TRUE(is_additive_principal(from_natural(1)));
}

TEST(Ordinal, RejectsNonCanonicalTerms) {
    EXPECT_THROW(Ordinal::from_terms({Term{Ordinal{}, 0}}), DomainError);
    EXPECT_THROW(Ordinal::from_terms({Term{Ordinal{}, 1}, Term{from_natural(1), 1}}), DomainError);
    EXPECT_THROW(Ordinal::from_terms({Term{from_natural(1), 1}, Term{from_natural(1), 2}}), DomainError);
}

TEST(Ordinal, Comparison) {
    EXPECT_GT(Ordinal::omega(), from_natural(1000000));
    EXPECT_EQ(compare(O("w^w + 1"), O("w^w + 1")), std::strong_ordering::equal);
    EXPECT_EQ(compare(O("w*2 + 3"), O("w^2")), std::strong_ordering::less);
    EXPECT_LT(O("w^w"), O("w^(w+1)"));
    EXPECT_LT(O("w^2*5 + w*100"), O("w^2*6"));
    EXPECT_LT(O("w^2 + w"), O("w^2 + w + 1"));  // proper prefix is smaller
    EXPECT_LT(Ordinal{}, from_natural(1));
}

TEST(Ordinal, OrderAgreesWithPolynomialOracle) {
    // Below w^w an ordinal is a coefficient vector compared from the top degree.
    auto make = [](const std::vector<unsigned>& coeffs) {  // coeffs[d] multiplies w^d
        std::vector<Term> terms;
        for (std::size_t d = coeffs.size(); d-- > 0;)
            if (coeffs[d]) terms.push_back(Term{from_natural(d), coeffs[d]});
        return Ordinal::from_terms(terms);
    };
    auto oracle_less = [](std::vector<unsigned> a, std::vector<unsigned> b) {
        a.resize(4);
        b.resize(4);
        for (std::size_t d = 4; d-- > 0;)
            if (a[d] != b[d]) return a[d] < b[d];
        return false;
    };
    std::vector<std::vector<unsigned>> all;
    for (unsigned x = 0; x < 81; ++x) all.push_back({x % 3, x / 3 % 3, x / 9 % 3, x / 27 % 3});
    for (const auto& a : all)
        for (const auto& b : all) EXPECT_EQ(make(a) < make(b), oracle_less(a, b));
}

TEST(Ordinal, AdditivePrincipal) {
    EXPECT_TRUE(is_additive_principal(O("w^w")));
    EXPECT_FALSE(is_additive_principal(O("w + 1")));
    EXPECT_TRUE(is_additive_principal(O("1")));
    EXPECT_FALSE(is_additive_principal(O("2")));
    EXPECT_FALSE(is_additive_principal(O("w*2")));
    EXPECT_FALSE(is_additive_principal(Ordinal{}));
}

TEST(Ordinal, HeadTail) {
    auto check = [](const char* x, const char* head, const char* tail) {
        const auto [h, t] = head_tail(O(x));
        EXPECT_EQ(h, O(head)) << x;
        EXPECT_EQ(t, O(tail)) << x;
        EXPECT_EQ(add(h, t), O(x)) << x;
    };
    check("w^2 + w + 1", "w^2", "w + 1");
    check("w*2", "w", "w");
    check("7", "1", "6");
    EXPECT_THROW(head_tail(O("w")), DomainError);
    EXPECT_THROW(head_tail(Ordinal{}), DomainError);
}

TEST(Ordinal, SuccessorsAndLimits) {
    EXPECT_EQ(successor(O("w")), O("w + 1"));
    EXPECT_EQ(predecessor(O("w + 1")), O("w"));
    EXPECT_EQ(successor(Ordinal{}), from_natural(1));
    EXPECT_TRUE(is_limit(O("w^2 + w")));
    EXPECT_FALSE(is_limit(Ordinal{}));
    EXPECT_FALSE(is_successor(Ordinal{}));
    EXPECT_TRUE(is_successor(O("w^w + 4")));
    EXPECT_THROW(predecessor(O("w")), DomainError);
    EXPECT_THROW(predecessor(Ordinal{}), DomainError);
}

TEST(Ordinal, FundamentalSequences) {
    EXPECT_EQ(fundamental_sequence(O("w"), 3), O("3"));
    EXPECT_EQ(fundamental_sequence(O("w^2"), 3), O("w*3"));
    EXPECT_EQ(fundamental_sequence(O("w^w"), 2), O("w^2"));
    EXPECT_EQ(fundamental_sequence(O("w^2*2 + w"), 4), O("w^2*2 + 4"));
    EXPECT_EQ(fundamental_sequence(O("w^(w^w)"), 2), O("w^(w^2)"));
    EXPECT_EQ(fundamental_sequence(O("w*3"), 0), O("w*2"));
    EXPECT_THROW(fundamental_sequence(O("w + 1"), 1), DomainError);
    EXPECT_THROW(fundamental_sequence(Ordinal{}, 1), DomainError);
}

TEST(Ordinal, FundamentalSequencesIncreaseTowardTheLimit) {
    for (const char* lim : {"w", "w^2", "w^w + w", "w^(w*2)", "w^(w^w)*3"}) {
        const Ordinal L = O(lim);
        Ordinal prev = fundamental_sequence(L, 0);
        for (unsigned k = 1; k < 8; ++k) {
            const Ordinal cur = fundamental_sequence(L, k);
            EXPECT_LT(prev, cur) << lim;
            EXPECT_LT(cur, L) << lim;
            prev = cur;
        }
    }
}

TEST(Ordinal, HeightAndHashing) {
    EXPECT_EQ(Ordinal{}.height(), 0u);
    EXPECT_EQ(O("5").height(), 1u);
    EXPECT_EQ(O("w^3 + 2").height(), 2u);
    EXPECT_EQ(O("w^w").height(), 3u);
    EXPECT_EQ(O("w^2 + 1").hash(), O("1 + w^2 + 1").hash());
    EXPECT_EQ(std::hash<Ordinal>{}(O("w")), Ordinal::omega().hash());
}
