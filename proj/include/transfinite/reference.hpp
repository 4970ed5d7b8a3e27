#pragma once

// Ordinal +, * and ^ evaluated from their transfinite recursions:
//
//   a + 0 = a        a + (b+1) = (a + b) + 1      a + L = sup { a + g : g < L }
//   a * 0 = 0        a * (b+1) = (a * b) + a      a * L = sup { a * g : g < L }
//   a ^ 0 = 1        a ^ (b+1) = (a ^ b) * a      a ^ L = sup { a ^ g : g < L }
//
// This is the second code path for checking the closed forms in
// classic_ops.hpp. A literal recursion through nested suprema visits a number
// of points exponential in the nesting, so suprema are unfolded only
// `sup_nesting` levels deep; below that, the value at a sample point comes from
// the synthesis recursion. Products come from the level-2 recursion over
// addition alone; powers from the level-3 recursion over the closed-form
// product, which this evaluator checks on its own first.

#include <cstdint>
#include <map>
#include <tuple>

#include "transfinite/budget.hpp"
#include "transfinite/classic_ops.hpp"
#include "transfinite/lub.hpp"
#include "transfinite/ordinal.hpp"
#include "transfinite/synthesis.hpp"

namespace transfinite {

enum class ClassicOp { Add, Mul, Pow };

class ReferenceEvaluator {
public:
    explicit ReferenceEvaluator(EvalBudget budget = {}, unsigned sup_nesting = 2)
        : budget_(budget), sup_nesting_(sup_nesting), depth_(budget.max_depth), products_(budget, 1), powers_(budget, 2) {}

    Ordinal eval(ClassicOp op, const Ordinal& a, const Ordinal& b) {
        return eval(op, a, b, sup_nesting_);
    }

private:
    static Ordinal identity(ClassicOp op, const Ordinal& a) {
        switch (op) {
            case ClassicOp::Add: return a;
            case ClassicOp::Mul: return Ordinal{};
            case ClassicOp::Pow: return from_natural(1);
        }
        return Ordinal{};
    }

    Ordinal step(ClassicOp op, const Ordinal& a, const Ordinal& x, unsigned nesting) {
        switch (op) {
            case ClassicOp::Add: return successor(x);
            case ClassicOp::Mul: return add(x, a);
            case ClassicOp::Pow: return eval(ClassicOp::Mul, x, a, nesting);
        }
        return x;
    }

    Ordinal eval(ClassicOp op, const Ordinal& a, const Ordinal& b, unsigned nesting) {
        if (b.is_zero()) return identity(op, a);
        auto key = std::make_tuple(static_cast<int>(op), a, b, nesting);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        DepthCounter::Guard guard(depth_);

        Ordinal result;
        if (is_successor(b)) {
            // b = lam + m: m successor steps on top of the value at lam.
            auto bt = b.terms();
            const Ordinal lam = Ordinal::from_terms({bt.begin(), bt.end() - 1});
            result = eval(op, a, lam, nesting);
            for (Natural i = 0; i < b.trailing().coefficient; ++i) {
                result = step(op, a, result, nesting);
                for (const Term& t : result.terms()) check_bits(t.coefficient, budget_);
            }
        } else if (nesting == 0) {
            switch (op) {
                case ClassicOp::Add: result = products_.synth(1, a, b); break;
                case ClassicOp::Mul: result = products_.synth(2, a, b); break;
                case ClassicOp::Pow: result = powers_.synth(3, a, b); break;
            }
        } else {
            const Ordinal seeds[] = {eval(op, a, Ordinal{}, nesting - 1),
                                     eval(op, a, from_natural(1), nesting - 1)};
            result = sup_by_sampling(
                b, [&](const Ordinal& g) { return eval(op, a, g, nesting - 1); }, seeds, budget_);
        }
        memo_.emplace(std::move(key), result);
        return result;
    }

    EvalBudget budget_;
    unsigned sup_nesting_;
    DepthCounter depth_;
    SynthesisEngine products_;
    SynthesisEngine powers_;
    std::map<std::tuple<int, Ordinal, Ordinal, unsigned>, Ordinal> memo_;
};

inline Ordinal reference_eval(ClassicOp op, const Ordinal& a, const Ordinal& b,
                              const EvalBudget& budget = {}, unsigned sup_nesting = 2) {
    return ReferenceEvaluator(budget, sup_nesting).eval(op, a, b);
}

}  // namespace transfinite
