#pragma once

// Closed-form Cantor normal form algorithms for ordinal +, * and ^.
//
// Exponentiation follows the supremum definition literally, so 0^b = 1 for
// every limit b (and 0^0 = 1). Standard references give 0^b = 0 for b > 0;
// the two only differ on a zero base with a limit exponent.

#include <vector>

#include "transfinite/budget.hpp"
#include "transfinite/ordinal.hpp"

namespace transfinite {

inline Ordinal add(const Ordinal& x, const Ordinal& y) {
    if (y.is_zero()) return x;
    if (x.is_zero()) return y;
    const Term& lead = y.leading();
    std::vector<Term> terms;
    terms.reserve(x.term_count() + y.term_count());
    for (const Term& t : x.terms()) {
        auto c = t.exponent <=> lead.exponent;
        if (c < 0) break;
        if (c == 0) {
            terms.push_back(Term{lead.exponent, t.coefficient + lead.coefficient});
            auto ys = y.terms();
            terms.insert(terms.end(), ys.begin() + 1, ys.end());
            return Ordinal::from_terms(std::move(terms));
        }
        terms.push_back(t);
    }
    auto ys = y.terms();
    terms.insert(terms.end(), ys.begin(), ys.end());
    return Ordinal::from_terms(std::move(terms));
}

/// x * n for a natural n: only the leading coefficient scales.
inline Ordinal mul_natural(const Ordinal& x, const Natural& n) {
    if (x.is_zero() || n.is_zero()) return Ordinal{};
    std::vector<Term> terms(x.terms().begin(), x.terms().end());
    terms.front().coefficient *= n;
    return Ordinal::from_terms(std::move(terms));
}

inline Ordinal mul(const Ordinal& x, const Ordinal& y) {
    if (x.is_zero() || y.is_zero()) return Ordinal{};
    const Ordinal& lead_exp = x.leading().exponent;
    Ordinal result;
    // x * (w^f1*d1 + ... ) = x*w^f1*d1 + ... by left distributivity;
    // x * w^f * d = w^(e1 + f) * d for f > 0.
    for (const Term& t : y.terms()) {
        if (t.exponent.is_zero())
            result = add(result, mul_natural(x, t.coefficient));
        else
            result = add(result, omega_power(add(lead_exp, t.exponent), t.coefficient));
    }
    return result;
}

/// Splits y = w * infinite_part + finite_part and returns both pieces.
inline std::pair<Ordinal, Natural> split_omega_multiple(const Ordinal& y) {
    std::vector<Term> quotient;
    Natural finite = 0;
    for (const Term& t : y.terms()) {
        if (t.exponent.is_zero()) {
            finite = t.coefficient;
            continue;
        }
        // 1 + e' = e: e' = e - 1 for finite e, e' = e otherwise.
        Ordinal e = t.exponent.is_finite() ? from_natural(t.exponent.finite_value() - 1)
                                           : t.exponent;
        quotient.push_back(Term{std::move(e), t.coefficient});
    }
    return {Ordinal::from_terms(std::move(quotient)), finite};
}

/// x^n for natural n by repeated squaring.
inline Ordinal pow_natural(const Ordinal& x, Natural n, const EvalBudget& budget = {}) {
    if (x.is_finite()) {
        const Natural base = x.finite_value();
        if (base <= 1 || n.is_zero()) return from_natural(n.is_zero() ? Natural(1) : base);
        // base^n has more than (bits(base) - 1) * n bits.
        const Natural lower = Natural(bit_length(base) - 1) * n;
        if (lower >= budget.max_bits) check_bits(budget.max_bits + 1, budget);
        return from_natural(boost::multiprecision::pow(base, static_cast<unsigned>(n)));
    }
    Ordinal result = from_natural(1);
    Ordinal base = x;
    while (!n.is_zero()) {
        if ((n & 1) != 0) result = mul(result, base);
        n >>= 1;
        if (!n.is_zero()) base = mul(base, base);
        check_bits(result.leading().coefficient, budget);
        check_bits(base.leading().coefficient, budget);
    }
    return result;
}

inline Ordinal pow(const Ordinal& x, const Ordinal& y, const EvalBudget& budget = {}) {
    if (y.is_zero()) return from_natural(1);
    if (x.is_zero()) return is_limit(y) ? from_natural(1) : Ordinal{};
    if (x == from_natural(1)) return x;
    // (w^e)^y = w^(e*y)
    if (!x.is_finite() && x.terms().size() == 1 && x.leading().coefficient == 1)
        return omega_power(mul(x.leading().exponent, y));

    auto [infinite_part, finite_part] = split_omega_multiple(y);
    Ordinal head = from_natural(1);
    if (!infinite_part.is_zero()) {
        // k^(w*q) = w^q for finite k >= 2; x^(w*q) = w^(e1 * w * q) for infinite x.
        if (x.is_finite())
            head = omega_power(infinite_part);
        else
            head = omega_power(mul(x.leading().exponent, mul(Ordinal::omega(), infinite_part)));
    }
    if (finite_part.is_zero()) return head;
    return mul(head, pow_natural(x, finite_part, budget));
}

}  // namespace transfinite
