#pragma once

// The operation sequence <a, b>_n on ordinals below epsilon_0.
//
// With b = w^b1 + ... + w^bk in Cantor normal form:
//
//   <a, b>_1 = a + b
//   <a, 0>_2 = 0,  <a, 0>_n = 1 (n >= 3)
//   <a, 1>_n = a
//   <a, w^e>_n = sup { <a, g>_n : g < w^e }                 (e > 0)
//   <a, b>_n = < <a, head>_n, <a, tail>_n >_{n-1}             (k >= 2)
//
// Suprema are evaluated by sampling along fundamental sequences (see lub.hpp).
// For a > 1 every <a, ->_n is strictly increasing, so the samples are cofinal
// in the supremum. For a <= 1 the values form a finite repertoire, and the
// seeds g = 0 and g = 1 are joined in so the maximum is attained.
//
// A run of c equal heads, <h, <h, ... <h, s>_m ...>_m>_m, is folded by
// doubling when level m is associative (m = 1, 2) and iterated otherwise.
//
// Levels 1-3 coincide with ordinal +, * and ^. An engine evaluates levels up
// to `closed_levels` with those closed forms and everything above from the
// recursion; closed_levels = 1 gives the recursion alone, which is exact but
// exponential once suprema nest inside products of large towers.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "transfinite/budget.hpp"
#include "transfinite/classic_ops.hpp"
#include "transfinite/hyperops.hpp"
#include "transfinite/lub.hpp"
#include "transfinite/ordinal.hpp"

namespace transfinite {

namespace detail {

struct OpKey {
    unsigned level;
    Ordinal left;
    Ordinal right;

    bool operator==(const OpKey&) const = default;
};

struct OpKeyHash {
    std::size_t operator()(const OpKey& k) const noexcept {
        return hash_combine(hash_combine(k.level, k.left.hash()), k.right.hash());
    }
};

// Either a value or the knowledge that the value is not representable.
struct Outcome {
    std::optional<Ordinal> value;
};

}  // namespace detail

/// Evaluation context for one top-level computation: budget, depth counter and
/// a memo table. Not shared between threads; the free functions below create
/// a fresh engine per call.
class SynthesisEngine {
public:
    static constexpr unsigned kDefaultClosedLevels = 3;

    explicit SynthesisEngine(EvalBudget budget = {}, unsigned closed_levels = kDefaultClosedLevels)
        : budget_(budget), closed_levels_(std::clamp(closed_levels, 1u, 3u)), depth_(budget.max_depth) {
        budget_.validate();
    }

    const EvalBudget& budget() const noexcept { return budget_; }
    unsigned closed_levels() const noexcept { return closed_levels_; }

    Ordinal synth(OpIndex n, const Ordinal& a, const Ordinal& b) {
        const unsigned level = n.value();
        if (level == 1) return add(a, b);
        if (b.is_zero()) return level == 2 ? Ordinal{} : from_natural(1);
        if (b == from_natural(1)) return a;
        if (level <= closed_levels_) {
            Ordinal r = level == 2 ? mul(a, b) : pow(a, b, budget_);
            check_size(r);
            return r;
        }

        detail::OpKey key{level, a, b};
        if (auto it = synth_memo_.find(key); it != synth_memo_.end()) return unwrap(it->second);

        DepthCounter::Guard guard(depth_);
        Ordinal result;
        try {
            if (is_additive_principal(b)) {
                result = sup_limit(n, a, b);
            } else {
                const Term& lead = b.leading();
                const Ordinal head_value = synth(n, a, omega_power(lead.exponent));
                auto bt = b.terms();
                const Ordinal rest = Ordinal::from_terms({bt.begin() + 1, bt.end()});
                Natural count = lead.coefficient;
                Ordinal seed;
                if (rest.is_zero()) {
                    seed = head_value;
                    count -= 1;
                } else {
                    seed = synth(n, a, rest);
                }
                result = iterate_left(level - 1, head_value, count, seed);
            }
        } catch (const NotRepresentable&) {
            synth_memo_.emplace(std::move(key), detail::Outcome{});
            throw;
        }
        check_size(result);
        synth_memo_.emplace(std::move(key), detail::Outcome{result});
        return result;
    }

    /// sup { <a, g>_n : g < b } for additive principal b > 1.
    Ordinal sup_limit(OpIndex n, const Ordinal& a, const Ordinal& b) {
        if (!is_additive_principal(b) || b == from_natural(1))
            throw DomainError("sup_limit requires an additive principal ordinal above 1");
        // From level 3 on, <0, ->_n and <1, ->_n only take the values 0 and 1
        // (they may alternate along w), and g = 0 already gives 1.
        if (n.value() >= 3 && a <= from_natural(1)) {
            last_trace_.clear();
            return from_natural(1);
        }
        DepthCounter::Guard guard(depth_);
        const Ordinal seeds[] = {synth(n, a, Ordinal{}), a};
        return sup_by_sampling(
            b, [&](const Ordinal& g) { return synth(n, a, g); }, seeds, budget_, &last_trace_);
    }

    /// The hyperoperation recursion carried over to ordinals unchanged:
    /// a *' 0 = e, a *' (g+1) = a * (a *' g), supremum at limits.
    Ordinal naive_ext(OpIndex n, const Ordinal& a, const Ordinal& b) {
        const unsigned level = n.value();
        if (level == 1) return add(a, b);
        if (b.is_zero()) return level == 2 ? Ordinal{} : from_natural(1);

        detail::OpKey key{level, a, b};
        if (auto it = naive_memo_.find(key); it != naive_memo_.end()) return unwrap(it->second);

        DepthCounter::Guard guard(depth_);
        Ordinal result;
        try {
            if (is_limit(b)) {
                const Ordinal seeds[] = {naive_ext(n, a, Ordinal{}), naive_ext(n, a, from_natural(1))};
                result = sup_by_sampling(
                    b, [&](const Ordinal& g) { return naive_ext(n, a, g); }, seeds, budget_);
            } else {
                // b = lam + m with lam zero or a limit.
                const Natural m = b.trailing().coefficient;
                auto bt = b.terms();
                const Ordinal lam = Ordinal::from_terms({bt.begin(), bt.end() - 1});
                Ordinal x = naive_ext(n, a, lam);
                if (level == 2) {
                    result = add(repeated_sum(a, m), x);
                } else {
                    result = iterate_fn(m, x, [&](const Ordinal& v) { return naive_ext(level - 1, a, v); });
                }
            }
        } catch (const NotRepresentable&) {
            naive_memo_.emplace(std::move(key), detail::Outcome{});
            throw;
        }
        check_size(result);
        naive_memo_.emplace(std::move(key), detail::Outcome{result});
        return result;
    }

    /// Whether <a, b>_n equals the right-associated fold
    /// <a, w^b1>_n *  ... * <a, w^bk>_n under level n-1.
    bool distributes(OpIndex n, const Ordinal& a, const Ordinal& b) {
        if (n.value() < 2) throw DomainError("distributes needs an operation index of at least 2");
        if (b.is_zero() || is_additive_principal(b))
            throw DomainError("distributes needs at least two Cantor normal form terms");
        const Ordinal direct = synth(n, a, b);
        auto bt = b.terms();
        std::optional<Ordinal> acc;
        for (auto it = bt.rbegin(); it != bt.rend(); ++it) {
            const Ordinal piece = synth(n, a, omega_power(it->exponent));
            for (Natural i = 0; i < it->coefficient; ++i)
                acc = acc ? synth(n.value() - 1, piece, *acc) : piece;
        }
        return *acc == direct;
    }

    /// Samples seen by the most recent sup_limit call.
    const std::vector<Ordinal>& last_trace() const noexcept { return last_trace_; }

private:
    static Ordinal unwrap(const detail::Outcome& o) {
        if (!o.value) throw NotRepresentable("value is at least epsilon_0");
        return *o.value;
    }

    void check_size(const Ordinal& x) const {
        if (x.height() > budget_.max_depth)
            throw BudgetExceeded("ordinal tree height exceeds the depth budget");
        for (const Term& t : x.terms()) check_bits(t.coefficient, budget_);
    }

    // h + h + ... + h (count copies) by doubling.
    Ordinal repeated_sum(const Ordinal& h, Natural count) const {
        Ordinal total;
        Ordinal block = h;
        while (!count.is_zero()) {
            if ((count & 1) != 0) total = add(total, block);
            count >>= 1;
            if (!count.is_zero()) block = add(block, block);
            check_size(total);
            check_size(block);
        }
        return total;
    }

    // h * h * ... * h at level 2 by doubling; powers of one element commute.
    Ordinal repeated_product(const Ordinal& h, Natural count) {
        std::optional<Ordinal> total;
        Ordinal block = h;
        while (!count.is_zero()) {
            if ((count & 1) != 0) total = total ? synth(2, *total, block) : block;
            count >>= 1;
            if (!count.is_zero()) block = synth(2, block, block);
        }
        return total ? *total : from_natural(1);
    }

    // <h, <h, ... <h, seed>_m ...>_m>_m with count copies of h.
    Ordinal iterate_left(unsigned m, const Ordinal& h, const Natural& count, const Ordinal& seed) {
        if (count.is_zero()) return seed;
        if (m == 1) return add(repeated_sum(h, count), seed);
        if (m == 2) return synth(2, repeated_product(h, count), seed);
        return iterate_fn(count, seed, [&](const Ordinal& v) { return synth(m, h, v); });
    }

    // Applies f count times, stopping early on a fixed point or a 2-cycle.
    template <class F>
    Ordinal iterate_fn(Natural count, Ordinal x, F&& f) {
        std::optional<Ordinal> prev;
        while (!count.is_zero()) {
            Ordinal next = f(x);
            check_size(next);
            count -= 1;
            if (next == x) return x;
            if (prev && next == *prev) return (count & 1) != 0 ? x : next;
            prev = std::move(x);
            x = std::move(next);
        }
        return x;
    }

    EvalBudget budget_;
    unsigned closed_levels_;
    DepthCounter depth_;
    std::unordered_map<detail::OpKey, detail::Outcome, detail::OpKeyHash> synth_memo_;
    std::unordered_map<detail::OpKey, detail::Outcome, detail::OpKeyHash> naive_memo_;
    std::vector<Ordinal> last_trace_;
};

inline Ordinal synth(OpIndex n, const Ordinal& a, const Ordinal& b, const EvalBudget& budget = {},
                     unsigned closed_levels = SynthesisEngine::kDefaultClosedLevels) {
    return SynthesisEngine(budget, closed_levels).synth(n, a, b);
}

inline Ordinal sup_limit(OpIndex n, const Ordinal& a, const Ordinal& b, const EvalBudget& budget = {},
                         unsigned closed_levels = SynthesisEngine::kDefaultClosedLevels) {
    return SynthesisEngine(budget, closed_levels).sup_limit(n, a, b);
}

inline Ordinal naive_ext(OpIndex n, const Ordinal& a, const Ordinal& b, const EvalBudget& budget = {}) {
    return SynthesisEngine(budget).naive_ext(n, a, b);
}

inline bool distributes(OpIndex n, const Ordinal& a, const Ordinal& b, const EvalBudget& budget = {},
                        unsigned closed_levels = SynthesisEngine::kDefaultClosedLevels) {
    return SynthesisEngine(budget, closed_levels).distributes(n, a, b);
}

}  // namespace transfinite
