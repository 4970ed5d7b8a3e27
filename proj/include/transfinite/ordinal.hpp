#pragma once

// Ordinals below epsilon_0 in coefficient-compressed Cantor normal form:
//
//     w^e1 * c1 + w^e2 * c2 + ... + w^ek * ck,   e1 > e2 > ... > ek,  ci >= 1
//
// Every exponent is again such an ordinal, so a value is a finite tree and the
// representable ordinals are exactly those below epsilon_0. Construction
// enforces canonicity, which makes structural equality coincide with ordinal
// equality.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "transfinite/errors.hpp"
#include "transfinite/natural.hpp"

namespace transfinite {

struct Term;

class Ordinal {
public:
    /// Zero, the empty sum.
    Ordinal() = default;

    /// Builds w^e1*c1 + ... from terms that must already be canonical
    /// (strictly decreasing exponents, positive coefficients).
    static Ordinal from_terms(std::vector<Term> terms);

    static Ordinal omega();

    std::span<const Term> terms() const;
    std::size_t term_count() const;
    bool is_zero() const noexcept { return node_ == nullptr; }
    const Term& leading() const;
    const Term& trailing() const;

    bool is_finite() const;
    /// Valid only when is_finite().
    Natural finite_value() const;

    /// Nesting depth of the exponent tree: 0 for zero, 1 for positive naturals,
    /// 2 for w-polynomials, and so on.
    std::size_t height() const noexcept;
    std::size_t hash() const noexcept;

    friend bool operator==(const Ordinal& x, const Ordinal& y);
    friend std::strong_ordering operator<=>(const Ordinal& x, const Ordinal& y);

private:
    struct Node;
    explicit Ordinal(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

struct Term {
    Ordinal exponent;
    Natural coefficient;
};

struct Ordinal::Node {
    std::vector<Term> terms;
    std::size_t hash = 0;
    std::size_t height = 0;
};

namespace detail {

inline std::size_t hash_combine(std::size_t seed, std::size_t value) {
    return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

inline std::size_t natural_hash(const Natural& n) {
    std::size_t h = 0;
    Natural v = n;
    while (!v.is_zero()) {
        h = hash_combine(h, static_cast<std::size_t>(static_cast<std::uint64_t>(v & 0xffffffffffffffffULL)));
        v >>= 64;
    }
    return h;
}

}  // namespace detail

inline std::strong_ordering operator<=>(const Ordinal& x, const Ordinal& y) {
    if (x.node_ == y.node_) return std::strong_ordering::equal;
    auto xs = x.terms();
    auto ys = y.terms();
    const std::size_t n = std::min(xs.size(), ys.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (auto c = xs[i].exponent <=> ys[i].exponent; c != 0) return c;
        if (xs[i].coefficient != ys[i].coefficient)
            return xs[i].coefficient < ys[i].coefficient ? std::strong_ordering::less
                                                         : std::strong_ordering::greater;
    }
    return xs.size() <=> ys.size();
}

inline bool operator==(const Ordinal& x, const Ordinal& y) {
    if (x.node_ == y.node_) return true;
    if (!x.node_ || !y.node_) return false;
    if (x.node_->hash != y.node_->hash || x.node_->terms.size() != y.node_->terms.size())
        return false;
    for (std::size_t i = 0; i < x.node_->terms.size(); ++i) {
        const Term& a = x.node_->terms[i];
        const Term& b = y.node_->terms[i];
        if (a.coefficient != b.coefficient || !(a.exponent == b.exponent)) return false;
    }
    return true;
}

inline Ordinal Ordinal::from_terms(std::vector<Term> terms) {
    if (terms.empty()) return Ordinal{};
    auto node = std::make_shared<Node>();
    std::size_t h = 0x51ed270b;
    std::size_t height = 0;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (terms[i].coefficient <= 0)
            throw DomainError("Cantor normal form coefficients must be positive");
        if (i > 0 && !(terms[i].exponent < terms[i - 1].exponent))
            throw DomainError("Cantor normal form exponents must strictly decrease");
        h = detail::hash_combine(h, terms[i].exponent.hash());
        h = detail::hash_combine(h, detail::natural_hash(terms[i].coefficient));
        height = std::max(height, terms[i].exponent.height() + 1);
    }
    node->terms = std::move(terms);
    node->hash = h;
    node->height = height;
    return Ordinal(std::move(node));
}

inline Ordinal Ordinal::omega() {
    static const Ordinal w = from_terms({Term{from_terms({Term{Ordinal{}, 1}}), 1}});
    return w;
}

inline std::span<const Term> Ordinal::terms() const {
    if (!node_) return {};
    return node_->terms;
}

inline std::size_t Ordinal::term_count() const { return node_ ? node_->terms.size() : 0; }

inline const Term& Ordinal::leading() const {
    if (!node_) throw DomainError("zero has no leading term");
    return node_->terms.front();
}

inline const Term& Ordinal::trailing() const {
    if (!node_) throw DomainError("zero has no trailing term");
    return node_->terms.back();
}

inline bool Ordinal::is_finite() const {
    return !node_ || (node_->terms.size() == 1 && node_->terms[0].exponent.is_zero());
}

inline Natural Ordinal::finite_value() const {
    if (!node_) return 0;
    if (!is_finite()) throw DomainError("ordinal is not finite");
    return node_->terms[0].coefficient;
}

inline std::size_t Ordinal::height() const noexcept { return node_ ? node_->height : 0; }

inline std::size_t Ordinal::hash() const noexcept { return node_ ? node_->hash : 0; }

struct OrdinalHash {
    std::size_t operator()(const Ordinal& x) const noexcept { return x.hash(); }
};

// ---------------------------------------------------------------------------
// Constructors and structural queries

inline Ordinal from_natural(const Natural& n) {
    if (n.is_zero()) return Ordinal{};
    return Ordinal::from_terms({Term{Ordinal{}, n}});
}

inline Ordinal from_natural(std::uint64_t n) { return from_natural(Natural(n)); }

/// w^exponent * coefficient (zero when coefficient is zero).
inline Ordinal omega_power(const Ordinal& exponent, const Natural& coefficient = 1) {
    if (coefficient.is_zero()) return Ordinal{};
    return Ordinal::from_terms({Term{exponent, coefficient}});
}

inline std::strong_ordering compare(const Ordinal& x, const Ordinal& y) { return x <=> y; }

/// Number of terms in the uncompressed form w^b1 + ... + w^bk.
inline Natural repeated_term_count(const Ordinal& x) {
    Natural k = 0;
    for (const Term& t : x.terms()) k += t.coefficient;
    return k;
}

/// Positive and a single term w^e in the uncompressed form.
inline bool is_additive_principal(const Ordinal& x) {
    return x.term_count() == 1 && x.leading().coefficient == 1;
}

inline bool is_successor(const Ordinal& x) {
    return !x.is_zero() && x.trailing().exponent.is_zero();
}

/// Zero is neither a limit nor a successor.
inline bool is_limit(const Ordinal& x) {
    return !x.is_zero() && !x.trailing().exponent.is_zero();
}

inline Ordinal successor(const Ordinal& x) {
    std::vector<Term> terms(x.terms().begin(), x.terms().end());
    if (!terms.empty() && terms.back().exponent.is_zero())
        terms.back().coefficient += 1;
    else
        terms.push_back(Term{Ordinal{}, 1});
    return Ordinal::from_terms(std::move(terms));
}

inline Ordinal predecessor(const Ordinal& x) {
    if (!is_successor(x)) throw DomainError("predecessor requires a successor ordinal");
    std::vector<Term> terms(x.terms().begin(), x.terms().end());
    if (terms.back().coefficient == 1)
        terms.pop_back();
    else
        terms.back().coefficient -= 1;
    return Ordinal::from_terms(std::move(terms));
}

/// Splits x = w^b1 + rest for x with at least two terms in the uncompressed
/// form; the head is w^b1 and the tail keeps the remaining copies.
inline std::pair<Ordinal, Ordinal> head_tail(const Ordinal& x) {
    if (x.is_zero() || is_additive_principal(x))
        throw DomainError("head/tail split needs at least two Cantor normal form terms");
    const Term& lead = x.leading();
    std::vector<Term> tail(x.terms().begin(), x.terms().end());
    if (lead.coefficient == 1)
        tail.erase(tail.begin());
    else
        tail.front().coefficient -= 1;
    return {omega_power(lead.exponent), Ordinal::from_terms(std::move(tail))};
}

/// x with its trailing term dropped and the trailing coefficient reduced by one;
/// x = without_last_copy(x) + w^e where w^e is the last uncompressed term.
inline Ordinal without_last_copy(const Ordinal& x) {
    std::vector<Term> terms(x.terms().begin(), x.terms().end());
    if (terms.back().coefficient == 1)
        terms.pop_back();
    else
        terms.back().coefficient -= 1;
    return Ordinal::from_terms(std::move(terms));
}

/// Appends w^e * c to prefix when every exponent of prefix exceeds e, or merges
/// with a trailing term of the same exponent.
inline Ordinal append_term(const Ordinal& prefix, const Ordinal& e, const Natural& c) {
    if (c.is_zero()) return prefix;
    std::vector<Term> terms(prefix.terms().begin(), prefix.terms().end());
    if (!terms.empty() && terms.back().exponent == e)
        terms.back().coefficient += c;
    else
        terms.push_back(Term{e, c});
    return Ordinal::from_terms(std::move(terms));
}

/// Standard assignment below epsilon_0:
///   (d + w^(g+1))[k] = d + w^g * k
///   (d + w^g)[k]     = d + w^(g[k])   for limit g
inline Ordinal fundamental_sequence(const Ordinal& limit, const Natural& k) {
    if (!is_limit(limit)) throw DomainError("fundamental sequence requires a limit ordinal");
    const Ordinal prefix = without_last_copy(limit);
    const Ordinal& e = limit.trailing().exponent;
    if (is_successor(e)) return append_term(prefix, predecessor(e), k);
    return append_term(prefix, fundamental_sequence(e, k), 1);
}

}  // namespace transfinite

template <>
struct std::hash<transfinite::Ordinal> {
    std::size_t operator()(const transfinite::Ordinal& x) const noexcept { return x.hash(); }
};
