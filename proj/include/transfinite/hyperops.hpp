#pragma once

// Goodstein's hyperoperations on the naturals:
//
//   [a, b]_1 = a + b,  [a, 0]_2 = 0,  [a, 0]_n = 1 (n >= 3),
//   [a, b+1]_{n+1} = [a, [a, b]_{n+1}]_n
//
// plus the variant that iterates on the left, [a, b+1]_{n+1} = [[a, b]_{n+1}, a]_n.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "transfinite/budget.hpp"
#include "transfinite/natural.hpp"

namespace transfinite {

/// Position in an operation sequence; 1 is addition.
class OpIndex {
public:
    constexpr OpIndex(unsigned value) : value_(value) {  // NOLINT(google-explicit-constructor)
        if (value == 0) throw DomainError("operation index must be at least 1");
    }
    constexpr unsigned value() const noexcept { return value_; }
    constexpr operator unsigned() const noexcept { return value_; }  // NOLINT

private:
    unsigned value_;
};

/// e with [a, e]_n = a for every a: 0 for addition, 1 above it.
inline Natural right_identity(OpIndex n) { return n.value() == 1 ? Natural(0) : Natural(1); }

namespace detail {

/// a + a + ... + a (count copies) added on the left of seed, by doubling.
inline Natural repeated_sum(const Natural& a, Natural count, const Natural& seed,
                            const EvalBudget& budget) {
    Natural total = 0;
    Natural block = a;
    while (!count.is_zero()) {
        if ((count & 1) != 0) total += block;
        count >>= 1;
        if (!count.is_zero()) block += block;
        check_bits(total, budget);
        check_bits(block, budget);
    }
    return total + seed;
}

inline Natural closed_power(const Natural& a, const Natural& b, const EvalBudget& budget) {
    if (b.is_zero()) return 1;  // 0^0 = 1
    if (a <= 1) return a;
    const Natural lower = Natural(bit_length(a) - 1) * b;
    if (lower >= budget.max_bits) check_bits(budget.max_bits + 1, budget);
    return boost::multiprecision::pow(a, static_cast<unsigned>(b));
}

// Rightward iteration with an explicit frame stack. Levels up to
// `closed_levels` are evaluated in closed form (+, *, ^); level 2 without a
// closed form uses repeated addition by doubling. A frame at level m holds the
// running value x and the number of applications of [a, -]_{m-1} left.
class HyperMachine {
public:
    HyperMachine(Natural a, unsigned closed_levels, const EvalBudget& budget)
        : a_(std::move(a)), closed_levels_(closed_levels), budget_(budget) {}

    Natural run(unsigned level, const Natural& b) {
        if (auto direct = direct_value(level, b)) return *direct;
        std::vector<Frame> stack;
        stack.push_back(Frame{level, b, base(level), b, {}, 0});
        while (true) {
            if (stack.size() > budget_.max_depth)
                throw BudgetExceeded("hyperoperation frame stack exceeds the depth budget");
            Frame& f = stack.back();
            if (f.remaining.is_zero()) {
                Natural result = f.x;
                memo_[{f.level, f.b}] = result;
                stack.pop_back();
                if (stack.empty()) return result;
                deliver(stack.back(), std::move(result));
                continue;
            }
            const unsigned lower = f.level - 1;
            if (auto direct = direct_value(lower, f.x)) {
                deliver(f, std::move(*direct));
                continue;
            }
            stack.push_back(Frame{lower, f.x, base(lower), f.x, {}, 0});
        }
    }

private:
    struct Frame {
        unsigned level;
        Natural b;          // argument being evaluated, for the memo
        Natural x;          // current value
        Natural remaining;  // applications still to perform
        Natural prev;       // previous value, for 2-cycle detection
        unsigned seen = 0;
    };

    static Natural base(unsigned level) { return level == 2 ? Natural(0) : Natural(1); }

    std::optional<Natural> direct_value(unsigned level, const Natural& b) {
        if (level == 1) {
            Natural s = a_ + b;
            check_bits(s, budget_);
            return s;
        }
        if (b.is_zero()) return base(level);
        if (level <= closed_levels_) {
            if (level == 2) {
                Natural p = a_ * b;
                check_bits(p, budget_);
                return p;
            }
            if (level == 3) return closed_power(a_, b, budget_);
        }
        if (level == 2) return repeated_sum(a_, b, 0, budget_);  // b-fold addition of a onto 0
        if (auto it = memo_.find({level, b}); it != memo_.end()) return it->second;
        return std::nullopt;
    }

    void deliver(Frame& f, Natural value) {
        check_bits(value, budget_);
        f.remaining -= 1;
        // Once the iterates repeat, the rest of the run is determined.
        if (value == f.x) {
            f.remaining = 0;
        } else if (f.seen >= 1 && value == f.prev) {
            if ((f.remaining & 1) != 0) value = f.x;
            f.remaining = 0;
        }
        f.prev = std::move(f.x);
        f.x = std::move(value);
        ++f.seen;
    }

    Natural a_;
    unsigned closed_levels_;
    const EvalBudget& budget_;
    std::map<std::pair<unsigned, Natural>, Natural> memo_;
};

}  // namespace detail

/// [a, b]_n. Levels 1-3 are computed in closed form (+, *, ^); higher levels
/// iterate the level below b times.
inline Natural hyper(OpIndex n, const Natural& a, const Natural& b, const EvalBudget& budget = {}) {
    return detail::HyperMachine(a, 3, budget).run(n.value(), b);
}

/// [a, b]_n evaluated from the recursion alone; the only arithmetic is
/// addition. Used to cross-check the closed forms.
inline Natural hyper_by_definition(OpIndex n, const Natural& a, const Natural& b,
                                   const EvalBudget& budget = {}) {
    return detail::HyperMachine(a, 0, budget).run(n.value(), b);
}

/// Leftward iteration: [a, 0]_2 = 0, [a, 0]_n = 1 (n >= 3),
/// [a, b+1]_{n+1} = [[a, b]_{n+1}, a]_n.
inline Natural left_hyper(OpIndex n, const Natural& a, const Natural& b,
                          const EvalBudget& budget = {}) {
    const unsigned level = n.value();
    if (level == 1) {
        Natural s = a + b;
        check_bits(s, budget);
        return s;
    }
    if (level == 2) return detail::repeated_sum(a, b, 0, budget);  // ((0 + a) + a) + ...
    Natural x = 1;
    for (Natural i = 0; i < b; ++i) {
        Natural next = left_hyper(level - 1, x, a, budget);
        check_bits(next, budget);
        if (next == x) break;  // fixed point
        x = std::move(next);
    }
    return x;
}

/// Some a <= 3 with e^a != a; tries a = 2 first since e^2 = 2 has no solution.
inline Natural no_left_identity_witness(const Natural& e) {
    static constexpr std::array<unsigned, 4> order{2, 0, 1, 3};
    for (unsigned a : order) {
        if (boost::multiprecision::pow(e, a) != a) return a;
    }
    throw std::logic_error("unreachable: e^2 = 2 has no natural solution");
}

}  // namespace transfinite
