#pragma once

// Least-upper-bound inference from a finite, increasing run of samples.
//
// A supremum over a limit L is realized by sampling f(L[0]), f(L[1]), ...
// along the fundamental sequence and recognising how the samples grow. The
// rules are tried in a fixed order and fail loudly when none applies:
//
//   R1  constant tail        the last three samples agree
//   R2  prefix peel          all samples share leading terms P  => P + lub(rest)
//   R3  exponent growth      leading exponents strictly increase => w^lub(exps)
//   R4  coefficient growth   fixed leading exponent e, growing coefficient => w^(e+1)
//   R5  tower growth         tree height strictly increases => epsilon_0 (not representable)
//
// Rules R2..R5 look at the longest strictly increasing suffix first and then at
// shorter suffixes, so a few irregular early samples do not block inference.

#include <algorithm>
#include <memory>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "transfinite/budget.hpp"
#include "transfinite/classic_ops.hpp"
#include "transfinite/format.hpp"
#include "transfinite/ordinal.hpp"

namespace transfinite {

enum class LubRule { ConstantTail, PrefixPeel, ExponentGrowth, CoefficientGrowth, TowerGrowth };

inline const char* to_string(LubRule rule) {
    switch (rule) {
        case LubRule::ConstantTail: return "constant-tail";
        case LubRule::PrefixPeel: return "prefix-peel";
        case LubRule::ExponentGrowth: return "exponent-growth";
        case LubRule::CoefficientGrowth: return "coefficient-growth";
        case LubRule::TowerGrowth: return "tower-growth";
    }
    return "?";
}

struct LubInference {
    LubRule rule = LubRule::ConstantTail;
    Ordinal value;                        // unused for TowerGrowth
    Ordinal prefix;                       // PrefixPeel
    Ordinal exponent;                     // CoefficientGrowth: fixed exponent; ExponentGrowth: limit exponent
    std::shared_ptr<const LubInference> inner;
    std::vector<Ordinal> samples;

    bool representable() const { return rule != LubRule::TowerGrowth; }
};

inline bool same_outcome(const LubInference& a, const LubInference& b) {
    if (a.representable() != b.representable()) return false;
    return !a.representable() || a.value == b.value;
}

/// No inference rule matched the samples.
class NoPatternError : public std::runtime_error {
public:
    explicit NoPatternError(std::vector<Ordinal> samples)
        : std::runtime_error("no supremum pattern matches the samples"),
          samples_(std::move(samples)) {}

    const std::vector<Ordinal>& samples() const noexcept { return samples_; }

private:
    std::vector<Ordinal> samples_;
};

namespace detail {

inline std::optional<LubInference> infer_increasing(std::span<const Ordinal> run);

inline std::optional<LubInference> try_prefix_peel(std::span<const Ordinal> u) {
    std::size_t shared = 0;
    for (;; ++shared) {
        if (shared >= u.front().term_count()) break;
        const Term& t = u.front().terms()[shared];
        bool all = true;
        for (const Ordinal& x : u) {
            if (shared >= x.term_count() || !(x.terms()[shared].exponent == t.exponent) ||
                x.terms()[shared].coefficient != t.coefficient) {
                all = false;
                break;
            }
        }
        if (!all) break;
    }
    if (shared == 0) return std::nullopt;
    auto first = u.front().terms();
    Ordinal prefix = Ordinal::from_terms({first.begin(), first.begin() + shared});
    std::vector<Ordinal> rest;
    rest.reserve(u.size());
    for (const Ordinal& x : u) {
        auto ts = x.terms();
        rest.push_back(Ordinal::from_terms({ts.begin() + shared, ts.end()}));
    }
    auto inner = infer_increasing(rest);
    if (!inner) return std::nullopt;
    LubInference out;
    out.rule = inner->representable() ? LubRule::PrefixPeel : LubRule::TowerGrowth;
    if (inner->representable()) out.value = add(prefix, inner->value);
    out.prefix = std::move(prefix);
    out.inner = std::make_shared<const LubInference>(std::move(*inner));
    return out;
}

inline std::span<const Ordinal> nonzero_part(std::span<const Ordinal> u) {
    return u.front().is_zero() ? u.subspan(1) : u;
}

inline std::optional<LubInference> try_exponent_growth(std::span<const Ordinal> u) {
    auto nz = nonzero_part(u);
    if (nz.size() < 3) return std::nullopt;
    std::vector<Ordinal> exps;
    for (const Ordinal& x : nz) {
        if (!exps.empty() && !(exps.back() < x.leading().exponent)) return std::nullopt;
        exps.push_back(x.leading().exponent);
    }
    auto inner = infer_increasing(exps);
    if (!inner) return std::nullopt;
    LubInference out;
    out.rule = inner->representable() ? LubRule::ExponentGrowth : LubRule::TowerGrowth;
    if (inner->representable()) {
        out.exponent = inner->value;
        out.value = omega_power(inner->value);
    }
    out.inner = std::make_shared<const LubInference>(std::move(*inner));
    return out;
}

inline std::optional<LubInference> try_coefficient_growth(std::span<const Ordinal> u) {
    auto nz = nonzero_part(u);
    if (nz.size() < 3) return std::nullopt;
    const Ordinal& e = nz.front().leading().exponent;
    for (std::size_t i = 0; i < nz.size(); ++i) {
        if (!(nz[i].leading().exponent == e)) return std::nullopt;
        if (i > 0 && !(nz[i - 1].leading().coefficient < nz[i].leading().coefficient))
            return std::nullopt;
    }
    LubInference out;
    out.rule = LubRule::CoefficientGrowth;
    out.exponent = e;
    out.value = omega_power(successor(e));
    return out;
}

inline bool heights_strictly_increase(std::span<const Ordinal> u) {
    for (std::size_t i = 1; i < u.size(); ++i)
        if (u[i - 1].height() >= u[i].height()) return false;
    return true;
}

// run is strictly increasing.
inline std::optional<LubInference> infer_increasing(std::span<const Ordinal> run) {
    for (std::size_t start = 0; start + 3 <= run.size(); ++start) {
        auto u = run.subspan(start);
        std::optional<LubInference> found = try_prefix_peel(u);
        if (!found) found = try_exponent_growth(u);
        if (!found) found = try_coefficient_growth(u);
        if (!found && heights_strictly_increase(u)) {
            found.emplace();
            found->rule = LubRule::TowerGrowth;
        }
        if (found) {
            found->samples.assign(run.begin(), run.end());
            return found;
        }
    }
    return std::nullopt;
}

}  // namespace detail

/// Applies R1..R5 to the samples (at least three). Throws NoPatternError when
/// no rule fires. A TowerGrowth result carries no value.
inline LubInference infer_lub_detailed(std::span<const Ordinal> samples) {
    std::vector<Ordinal> all(samples.begin(), samples.end());
    if (all.size() < 3) throw NoPatternError(std::move(all));
    const Ordinal max_sample = *std::max_element(all.begin(), all.end());

    const std::size_t n = all.size();
    if (all[n - 1] == all[n - 2] && all[n - 2] == all[n - 3]) {
        LubInference out;
        out.rule = LubRule::ConstantTail;
        out.value = max_sample;
        out.samples = std::move(all);
        return out;
    }

    std::size_t start = n - 1;
    while (start > 0 && all[start - 1] < all[start]) --start;
    if (n - start < 3) throw NoPatternError(std::move(all));

    auto found = detail::infer_increasing(std::span<const Ordinal>(all).subspan(start));
    if (!found) throw NoPatternError(std::move(all));
    if (found->representable() && found->value < max_sample) found->value = max_sample;
    found->samples = std::move(all);
    return *found;
}

inline Ordinal infer_lub(std::span<const Ordinal> samples) {
    LubInference inf = infer_lub_detailed(samples);
    if (!inf.representable())
        throw NotRepresentable("samples grow as an exponential tower; the supremum is epsilon_0");
    return inf.value;
}

/// Drives sampling of f along the fundamental sequence of `limit`.
///
/// Samples are taken lazily for k = 0, 1, ... up to budget.sup_samples. Once four
/// samples exist, inference runs after every new sample; two consecutive
/// agreeing inferences end sampling early. When a sample overflows the
/// natural-size budget, the most recent inference (if any) is used. The
/// caller's seed values are joined into the result by maximum.
template <class SampleFn>
Ordinal sup_by_sampling(const Ordinal& limit, SampleFn&& f, std::span<const Ordinal> seeds,
                        const EvalBudget& budget, std::vector<Ordinal>* trace = nullptr) {
    std::vector<Ordinal> samples;
    std::optional<LubInference> last;
    for (std::size_t k = 0; k < budget.sup_samples; ++k) {
        Ordinal value;
        try {
            value = f(fundamental_sequence(limit, Natural(k)));
        } catch (const SizeBudgetExceeded&) {
            if (last) break;
            throw;
        }
        samples.push_back(std::move(value));
        if (samples.size() < 4 && samples.size() < budget.sup_samples) continue;
        try {
            LubInference inf = infer_lub_detailed(samples);
            const bool stable = last && same_outcome(*last, inf);
            last = std::move(inf);
            if (stable) break;
        } catch (const NoPatternError&) {
            last.reset();
        }
    }
    if (trace) *trace = samples;
    if (!last) {
        std::ostringstream msg;
        msg << "supremum not inferred from " << samples.size() << " samples: [";
        for (std::size_t i = 0; i < samples.size(); ++i) msg << (i ? ", " : "") << to_text(samples[i]);
        msg << "]";
        throw BudgetExceeded(msg.str());
    }
    if (!last->representable())
        throw NotRepresentable("samples grow as an exponential tower; the supremum is epsilon_0");
    Ordinal result = last->value;
    for (const Ordinal& s : seeds)
        if (result < s) result = s;
    return result;
}

}  // namespace transfinite
