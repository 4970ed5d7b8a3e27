#pragma once

// Deterministic finite sets of ordinals: every Cantor normal form tree within
// caps on height, coefficient size and number of distinct terms.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <vector>

#include "transfinite/errors.hpp"
#include "transfinite/ordinal.hpp"

namespace transfinite {

struct LatticeSpec {
    std::size_t max_depth = 2;  // tree height; naturals have height 1
    unsigned max_coeff = 2;
    std::size_t max_terms = 2;

    bool operator==(const LatticeSpec&) const = default;
};

inline constexpr std::size_t kLatticeLimit = 2'000'000;

/// All ordinals with height <= max_depth, coefficients in [1, max_coeff] and at
/// most max_terms terms, in increasing order. Zero is included.
inline std::vector<Ordinal> build_lattice(const LatticeSpec& spec) {
    if (spec.max_coeff == 0 || spec.max_terms == 0)
        throw DomainError("lattice caps must be positive");
    std::vector<Ordinal> level{Ordinal{}};
    for (std::size_t d = 1; d <= spec.max_depth; ++d) {
        // Exponents from the previous level, largest first.
        std::vector<Ordinal> exps(level.rbegin(), level.rend());
        std::vector<Ordinal> next;
        std::vector<Term> terms;
        std::function<void(std::size_t)> extend = [&](std::size_t from) {
            next.push_back(Ordinal::from_terms(terms));
            if (next.size() > kLatticeLimit) throw DomainError("lattice is too large; lower the caps");
            if (terms.size() == spec.max_terms) return;
            for (std::size_t i = from; i < exps.size(); ++i) {
                for (unsigned c = 1; c <= spec.max_coeff; ++c) {
                    terms.push_back(Term{exps[i], Natural(c)});
                    extend(i + 1);
                    terms.pop_back();
                }
            }
        };
        extend(0);
        std::sort(next.begin(), next.end());
        level = std::move(next);
    }
    return level;
}

/// Every k-th element of `xs`, starting at the first.
inline std::vector<Ordinal> stride_sample(const std::vector<Ordinal>& xs, std::size_t count) {
    std::vector<Ordinal> out;
    if (count == 0 || xs.empty()) return out;
    const std::size_t step = std::max<std::size_t>(1, xs.size() / count);
    for (std::size_t i = 0; i < xs.size() && out.size() < count; i += step) out.push_back(xs[i]);
    return out;
}

}  // namespace transfinite
