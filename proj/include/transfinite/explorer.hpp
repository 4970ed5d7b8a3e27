#pragma once

// Main numbers of <-, ->_i: ordinals d > 0 whose initial segment is closed,
// i.e. <a, b>_i < d for all a, b < d.
//
// Candidates and operands come from a finite lattice (lattice.hpp), so a
// positive verdict only means "main on the sample". A refutation carries a
// witness pair and is exact.
//
// For a > 1 the map <a, ->_i is strictly increasing, so the pair (a, b) with
// the largest lattice b below d decides whether any b works; the least
// violating b is then found by bisection. For a <= 1 every b is tried.
// Left operands are tried from the largest down, which finds a violation on
// the first try for most non-main candidates.

#include <algorithm>
#include <cstddef>
#include <exception>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "transfinite/budget.hpp"
#include "transfinite/errors.hpp"
#include "transfinite/format.hpp"
#include "transfinite/lattice.hpp"
#include "transfinite/ordinal.hpp"
#include "transfinite/synthesis.hpp"

namespace transfinite {

/// Witness that d is not a main number: <left, right>_i >= d with both below d.
/// An empty value means the result is at least epsilon_0.
struct Refutation {
    Ordinal candidate;
    Ordinal left;
    Ordinal right;
    std::optional<Ordinal> value;
};

struct MainVerdict {
    bool main_on_sample = false;
    std::optional<Refutation> witness;
};

/// One pairing of the sorted infinite main numbers with <w, w^rank>_{i+1}.
struct ConjectureRow {
    std::size_t rank = 0;
    std::optional<Ordinal> expected;  // empty: not representable (>= epsilon_0)
    std::optional<Ordinal> observed;  // empty: no confirmed main at this rank
    bool match = false;
    bool beyond_bound = false;  // expected exceeds the bound; no observation possible
};

struct MainNumberReport {
    unsigned op_index = 1;
    Ordinal bound;
    LatticeSpec lattice;
    std::size_t candidates = 0;
    std::vector<Ordinal> confirmed;
    std::vector<Refutation> refuted;
    std::vector<ConjectureRow> zero_indexed;
    std::vector<ConjectureRow> one_indexed;

    /// "0-indexed", "1-indexed", "both" or "none".
    std::string matching_convention() const;
    std::string to_json() const;
};

/// Caps derived from the bound: height of the bound (at least 2), its largest
/// coefficient (at least 2), and two terms.
inline LatticeSpec default_lattice_for(const Ordinal& bound) {
    LatticeSpec spec;
    spec.max_depth = std::max<std::size_t>(2, bound.height());
    Natural largest = 2;
    auto visit = [&](auto&& self, const Ordinal& x) -> void {
        for (const Term& t : x.terms()) {
            largest = std::max(largest, t.coefficient);
            self(self, t.exponent);
        }
    };
    visit(visit, bound);
    if (largest > 64) throw DomainError("bound has a coefficient above 64; pass --coeff explicitly");
    spec.max_coeff = static_cast<unsigned>(largest);
    spec.max_terms = 2;
    return spec;
}

/// Closure tests against one sorted lattice, with a value cache.
class MainNumberChecker {
public:
    MainNumberChecker(OpIndex i, std::vector<Ordinal> lattice, EvalBudget budget = {})
        : op_(i), lattice_(std::move(lattice)), engine_(budget) {
        std::sort(lattice_.begin(), lattice_.end());
        lattice_.erase(std::unique(lattice_.begin(), lattice_.end()), lattice_.end());
    }

    const std::vector<Ordinal>& lattice() const noexcept { return lattice_; }

    MainVerdict check(const Ordinal& d) {
        if (d.is_zero()) throw DomainError("main numbers are positive");
        const auto end = std::lower_bound(lattice_.begin(), lattice_.end(), d);
        const std::span<const Ordinal> below(lattice_.begin(), end);
        MainVerdict verdict;
        if (below.empty()) {
            verdict.main_on_sample = true;
            return verdict;
        }
        const Ordinal one = from_natural(1);
        for (auto it = below.rbegin(); it != below.rend(); ++it) {
            const Ordinal& a = *it;
            std::optional<std::size_t> hit;
            if (a <= one) {
                for (std::size_t j = 0; j < below.size() && !hit; ++j)
                    if (reaches(a, below[j], d)) hit = j;
            } else if (reaches(a, below.back(), d)) {
                std::size_t lo = 0, hi = below.size() - 1;  // below[hi] reaches d
                while (lo < hi) {
                    const std::size_t mid = lo + (hi - lo) / 2;
                    if (reaches(a, below[mid], d))
                        hi = mid;
                    else
                        lo = mid + 1;
                }
                hit = lo;
            }
            if (hit) {
                const Ordinal& b = below[*hit];
                verdict.witness = Refutation{d, a, b, value(a, b)};
                return verdict;
            }
        }
        verdict.main_on_sample = true;
        return verdict;
    }

private:
    std::optional<Ordinal> value(const Ordinal& a, const Ordinal& b) {
        auto key = std::make_pair(a, b);
        if (auto it = cache_.find(key); it != cache_.end()) return it->second;
        std::optional<Ordinal> v;
        try {
            v = engine_.synth(op_, a, b);
        } catch (const NotRepresentable&) {
        }
        cache_.emplace(std::move(key), v);
        return v;
    }

    // <a, b>_i >= d, counting epsilon_0 and above as reaching d.
    bool reaches(const Ordinal& a, const Ordinal& b, const Ordinal& d) {
        const auto v = value(a, b);
        return !v || *v >= d;
    }

    OpIndex op_;
    std::vector<Ordinal> lattice_;
    SynthesisEngine engine_;
    std::map<std::pair<Ordinal, Ordinal>, std::optional<Ordinal>> cache_;
};

inline MainVerdict is_main_number(OpIndex i, const Ordinal& d, const LatticeSpec& lattice,
                                  const EvalBudget& budget = {}) {
    return MainNumberChecker(i, build_lattice(lattice), budget).check(d);
}

namespace detail {

inline std::optional<Ordinal> expected_main(OpIndex i, std::size_t rank, SynthesisEngine& engine) {
    try {
        return engine.synth(i.value() + 1, Ordinal::omega(), omega_power(from_natural(rank)));
    } catch (const NotRepresentable&) {
        return std::nullopt;
    }
}

inline std::vector<ConjectureRow> pair_ranks(OpIndex i, const std::vector<Ordinal>& mains,
                                             std::size_t first_rank, const Ordinal& bound,
                                             SynthesisEngine& engine) {
    std::vector<ConjectureRow> rows;
    for (std::size_t j = 0; j <= mains.size(); ++j) {
        ConjectureRow row;
        row.rank = first_rank + j;
        row.expected = expected_main(i, row.rank, engine);
        if (j < mains.size()) row.observed = mains[j];
        if (row.observed) {
            row.match = row.expected && *row.expected == *row.observed;
        } else {
            // One row past the last main: fine when the prediction lies beyond the bound.
            row.beyond_bound = !row.expected || *row.expected > bound;
            row.match = row.beyond_bound;
        }
        rows.push_back(std::move(row));
        if (!rows.back().observed) break;
    }
    return rows;
}

inline bool all_match(const std::vector<ConjectureRow>& rows) {
    return std::all_of(rows.begin(), rows.end(), [](const ConjectureRow& r) { return r.match; });
}

inline nlohmann::ordered_json value_json(const std::optional<Ordinal>& v) {
    if (!v) return "not representable (>= epsilon_0)";
    return to_text(*v);
}

}  // namespace detail

/// Classifies every lattice element in (0, bound] and pairs the infinite main
/// numbers found with <w, w^rank>_{i+1} under both rank conventions. With
/// threads > 1 candidates are split across workers; the report does not depend
/// on the thread count.
inline MainNumberReport enumerate_main_numbers(OpIndex i, const Ordinal& bound,
                                               const LatticeSpec& spec, const EvalBudget& budget = {},
                                               unsigned threads = 1) {
    const std::vector<Ordinal> lattice = build_lattice(spec);
    std::vector<Ordinal> candidates;
    for (const Ordinal& x : lattice)
        if (!x.is_zero() && x <= bound) candidates.push_back(x);

    std::vector<MainVerdict> verdicts(candidates.size());
    threads = std::max(1u, threads);
    auto work = [&](unsigned t) {
        MainNumberChecker checker(i, lattice, budget);
        for (std::size_t c = t; c < candidates.size(); c += threads) verdicts[c] = checker.check(candidates[c]);
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::exception_ptr> errors(threads);
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back([&, t] {
                try {
                    work(t);
                } catch (...) {
                    errors[t] = std::current_exception();
                }
            });
        for (auto& th : pool) th.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
    }

    MainNumberReport report;
    report.op_index = i.value();
    report.bound = bound;
    report.lattice = spec;
    report.candidates = candidates.size();
    for (std::size_t c = 0; c < candidates.size(); ++c) {
        if (verdicts[c].main_on_sample)
            report.confirmed.push_back(candidates[c]);
        else
            report.refuted.push_back(*verdicts[c].witness);
    }

    std::vector<Ordinal> infinite;
    for (const Ordinal& m : report.confirmed)
        if (!m.is_finite()) infinite.push_back(m);
    SynthesisEngine engine(budget);
    report.zero_indexed = detail::pair_ranks(i, infinite, 0, bound, engine);
    report.one_indexed = detail::pair_ranks(i, infinite, 1, bound, engine);
    return report;
}

inline std::string MainNumberReport::matching_convention() const {
    const bool zero = detail::all_match(zero_indexed);
    const bool one = detail::all_match(one_indexed);
    if (zero && one) return "both";
    if (zero) return "0-indexed";
    if (one) return "1-indexed";
    return "none";
}

inline std::string MainNumberReport::to_json() const {
    using nlohmann::ordered_json;
    ordered_json j;
    j["op_index"] = op_index;
    j["bound"] = to_text(bound);
    j["lattice"] = {{"max_depth", lattice.max_depth},
                    {"max_coeff", lattice.max_coeff},
                    {"max_terms", lattice.max_terms}};
    j["verdicts"] = "confirmed means closed on the lattice sample only; refutations are exact";
    j["candidates"] = candidates;
    ordered_json conf = ordered_json::array();
    for (const Ordinal& m : confirmed) conf.push_back(to_text(m));
    j["confirmed"] = conf;
    ordered_json ref = ordered_json::array();
    for (const Refutation& r : refuted)
        ref.push_back({{"candidate", to_text(r.candidate)},
                       {"witness", {to_text(r.left), to_text(r.right)}},
                       {"value", detail::value_json(r.value)}});
    j["refuted"] = ref;
    auto rows = [](const std::vector<ConjectureRow>& rs) {
        ordered_json out = ordered_json::array();
        for (const ConjectureRow& r : rs) {
            ordered_json row;
            row["rank"] = r.rank;
            row["expected"] = detail::value_json(r.expected);
            row["observed"] = r.observed ? ordered_json(to_text(*r.observed)) : ordered_json(nullptr);
            row["match"] = r.match;
            if (!r.observed) row["beyond_bound"] = r.beyond_bound;
            out.push_back(std::move(row));
        }
        return out;
    };
    j["conjecture"] = {{"zero_indexed", rows(zero_indexed)},
                       {"one_indexed", rows(one_indexed)},
                       {"matching_convention", matching_convention()}};
    return j.dump(2);
}

}  // namespace transfinite
