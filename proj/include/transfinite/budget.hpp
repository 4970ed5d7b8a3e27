#pragma once

#include <cstddef>
#include <string>

#include "transfinite/errors.hpp"
#include "transfinite/natural.hpp"

namespace transfinite {

/// Limits that make the partial operations total: every evaluation either
/// finishes inside the budget or throws BudgetExceeded.
struct EvalBudget {
    std::size_t max_depth = 2000;      // nested evaluation frames
    std::size_t max_bits = 1u << 16;   // size cap for any natural number produced
    std::size_t sup_samples = 8;       // fundamental-sequence samples per supremum

    void validate() const {
        if (max_depth == 0 || max_bits == 0 || sup_samples == 0)
            throw DomainError("evaluation budget fields must be positive");
        if (sup_samples < 3)
            throw DomainError("sup_samples must be at least 3");
    }
};

inline void check_bits(std::size_t bits, const EvalBudget& budget) {
    if (bits > budget.max_bits)
        throw SizeBudgetExceeded("natural number of about " + std::to_string(bits) +
                             " bits exceeds the budget of " +
                             std::to_string(budget.max_bits) + " bits");
}

inline void check_bits(const Natural& n, const EvalBudget& budget) {
    check_bits(bit_length(n), budget);
}

/// Tracks recursion depth for one evaluation; copies share nothing.
class DepthCounter {
public:
    explicit DepthCounter(std::size_t limit) : limit_(limit) {}

    class Guard {
    public:
        explicit Guard(DepthCounter& counter) : counter_(counter) {
            if (++counter_.depth_ > counter_.limit_) {
                --counter_.depth_;
                throw BudgetExceeded("recursion depth budget of " +
                                     std::to_string(counter_.limit_) + " exhausted");
            }
        }
        ~Guard() { --counter_.depth_; }
        Guard(const Guard&) = delete;
        Guard& operator=(const Guard&) = delete;

    private:
        DepthCounter& counter_;
    };

    std::size_t depth() const noexcept { return depth_; }

private:
    std::size_t limit_;
    std::size_t depth_ = 0;
};

}  // namespace transfinite
