#pragma once

// Oracle and property suites shared by the acceptance binary and the CLI's
// `selftest`. Each suite returns one pass/fail record; `outcomes` keeps every
// computed value (or error tag) so runs with different sampling budgets can be
// compared value by value.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "transfinite/budget.hpp"
#include "transfinite/calculator.hpp"
#include "transfinite/classic_ops.hpp"
#include "transfinite/explorer.hpp"
#include "transfinite/format.hpp"
#include "transfinite/hyperops.hpp"
#include "transfinite/lattice.hpp"
#include "transfinite/notation.hpp"
#include "transfinite/ordinal.hpp"
#include "transfinite/reference.hpp"
#include "transfinite/synthesis.hpp"

namespace transfinite::suites {

struct SuiteResult {
    int id = 0;
    std::string name;
    bool ok = true;          // every check held
    double seconds = 0;
    double limit_seconds = 0;
    std::string detail;
    std::vector<std::string> outcomes;

    bool passed() const { return ok && seconds < limit_seconds; }
};

struct SuiteOptions {
    EvalBudget budget;
    std::string cli_path;  // when empty, suite 11 evaluates in-process
    unsigned threads = 4;
};

inline std::string line(const SuiteResult& r) {
    std::ostringstream out;
    out.setf(std::ios::fixed);
    out.precision(3);
    out << (r.passed() ? "[PASS] " : "[FAIL] ") << r.id << ". " << r.name << ": " << r.detail << " ("
        << r.seconds << " s, limit " << r.limit_seconds << " s)";
    return out.str();
}

// ---------------------------------------------------------------------------
// Corpora

inline Ordinal w() { return Ordinal::omega(); }
inline Ordinal nat(std::uint64_t n) { return from_natural(n); }

/// About 33 ordinals below w^(w^2): small specials plus an even spread of the
/// lattice with height 3, coefficients and term counts up to 2.
inline std::vector<Ordinal> classic_corpus() {
    std::vector<Ordinal> out{nat(0), nat(1), nat(2), nat(3), w(), successor(w()),
                             successor(mul(w(), nat(2))), add(omega_power(nat(2)), add(w(), nat(2)))};
    const Ordinal bound = omega_power(omega_power(nat(2)));
    std::vector<Ordinal> below;
    for (const Ordinal& x : build_lattice({3, 2, 2}))
        if (x < bound) below.push_back(x);
    for (const Ordinal& x : stride_sample(below, 26))
        if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
    return out;
}

/// 32 increasing ordinals below w^w, giving 496 ordered pairs.
inline std::vector<Ordinal> monotone_corpus() {
    return stride_sample(build_lattice({2, 3, 3}), 32);
}

namespace detail {

class Stopwatch {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// Runs body, converting a stray exception into a failed check.
inline SuiteResult run(int id, std::string name, double limit, const std::function<void(SuiteResult&)>& body) {
    SuiteResult r;
    r.id = id;
    r.name = std::move(name);
    r.limit_seconds = limit;
    Stopwatch clock;
    try {
        body(r);
    } catch (const std::exception& e) {
        r.ok = false;
        r.detail += std::string(r.detail.empty() ? "" : "; ") + "unexpected error: " + e.what();
    }
    r.seconds = clock.seconds();
    return r;
}

inline void fail(SuiteResult& r, std::size_t& failures, const std::string& what) {
    r.ok = false;
    if (failures++ < 3) r.detail += (r.detail.empty() ? "" : "; ") + what;
}

template <class F>
std::string outcome_of(F&& f) {
    try {
        return to_text(f());
    } catch (const NotRepresentable&) {
        return "!not-representable";
    } catch (const BudgetExceeded&) {
        return "!budget";
    }
}

inline bool is_value(const std::string& outcome) { return outcome.empty() || outcome[0] != '!'; }

inline Natural power_by_loop(const Natural& a, unsigned b) {
    Natural r = 1;
    for (unsigned i = 0; i < b; ++i) r *= a;
    return r;
}

inline bool canonical(const Ordinal& x) {
    auto ts = x.terms();
    for (std::size_t i = 0; i < ts.size(); ++i) {
        if (ts[i].coefficient < 1 || !canonical(ts[i].exponent)) return false;
        if (i > 0 && !(ts[i].exponent < ts[i - 1].exponent)) return false;
    }
    return true;
}

inline Ordinal random_ordinal(std::mt19937_64& rng, int depth) {
    std::uniform_int_distribution<int> coin(0, 3);
    if (depth == 0 || coin(rng) == 0) {
        if (coin(rng) == 0) return Ordinal{};
        Natural v = std::uniform_int_distribution<std::uint64_t>(1, 1000000)(rng);
        if (coin(rng) == 0) v <<= 80;
        return from_natural(v);
    }
    const int count = std::uniform_int_distribution<int>(1, 4)(rng);
    std::vector<Ordinal> exps;
    for (int i = 0; i < count; ++i) exps.push_back(random_ordinal(rng, depth - 1));
    std::sort(exps.begin(), exps.end(), [](const Ordinal& a, const Ordinal& b) { return b < a; });
    exps.erase(std::unique(exps.begin(), exps.end()), exps.end());
    std::vector<Term> terms;
    for (Ordinal& e : exps) {
        Natural c = std::uniform_int_distribution<std::uint64_t>(1, 5)(rng);
        if (coin(rng) == 0) c = std::uniform_int_distribution<std::uint64_t>(1, 1u << 30)(rng);
        terms.push_back(Term{std::move(e), c});
    }
    return Ordinal::from_terms(std::move(terms));
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Suites, numbered as in the acceptance list

inline SuiteResult hyper_closed_forms() {
    return detail::run(1, "hyperoperations agree with * (a,b<=50) and ^ (a,b<=10)", 1.0, [](SuiteResult& r) {
        std::size_t failures = 0, cases = 0;
        for (unsigned a = 0; a <= 50; ++a)
            for (unsigned b = 0; b <= 50; ++b, ++cases)
                if (hyper(2, a, b) != Natural(a) * b)
                    detail::fail(r, failures, "[" + std::to_string(a) + "," + std::to_string(b) + "]_2");
        for (unsigned a = 0; a <= 10; ++a)
            for (unsigned b = 0; b <= 10; ++b, ++cases) {
                const Natural expect = detail::power_by_loop(a, b);
                if (hyper(3, a, b) != expect || hyper_by_definition(3, a, b) != expect)
                    detail::fail(r, failures, "[" + std::to_string(a) + "," + std::to_string(b) + "]_3");
            }
        r.detail = std::to_string(failures) + " mismatches in " + std::to_string(cases) + " cases" +
                   (r.detail.empty() ? "" : "; " + r.detail);
    });
}

inline SuiteResult no_left_identity() {
    return detail::run(2, "exponentiation has no left identity (e in [0,1000])", 1.0, [](SuiteResult& r) {
        std::size_t failures = 0;
        for (unsigned e = 0; e <= 1000; ++e) {
            const Natural a = no_left_identity_witness(e);
            if (a > 3 || detail::power_by_loop(e, static_cast<unsigned>(a)) == a)
                detail::fail(r, failures, "bad witness for e=" + std::to_string(e));
        }
        r.detail = std::to_string(failures) + " bad witnesses of 1001" + (r.detail.empty() ? "" : "; " + r.detail);
    });
}

inline SuiteResult normal_forms() {
    return detail::run(3, "normal forms of 10^4 random ordinals", 5.0, [](SuiteResult& r) {
        std::mt19937_64 rng(20240607);
        std::size_t failures = 0;
        for (int i = 0; i < 10000; ++i) {
            const Ordinal x = detail::random_ordinal(rng, 4);
            const std::string text = to_text(x);
            if (!detail::canonical(x)) detail::fail(r, failures, "not canonical: " + text);
            if (!(eval_expr(*parse(text)) == x)) detail::fail(r, failures, "round trip: " + text);
            if (is_additive_principal(x) != (repeated_term_count(x) == 1))
                detail::fail(r, failures, "principal test: " + text);
            if (x.is_zero()) continue;
            if (is_additive_principal(x)) {
                // Absorbs every smaller summand on the left.
                const Ordinal y = detail::random_ordinal(rng, 4);
                if (y < x && !(add(y, x) == x)) detail::fail(r, failures, "absorption: " + text);
            } else {
                // Head and tail are both smaller and add back up to x.
                const auto [head, tail] = head_tail(x);
                if (!(head < x) || !(tail < x) || !(add(head, tail) == x))
                    detail::fail(r, failures, "head/tail: " + text);
            }
        }
        r.detail = std::to_string(failures) + " violations" + (r.detail.empty() ? "" : "; " + r.detail);
    });
}

inline SuiteResult reference_equivalence(const SuiteOptions& opt) {
    return detail::run(4, "closed-form + * ^ equal the transfinite recursion", 10.0, [&](SuiteResult& r) {
        std::size_t failures = 0, cases = 0;
        const ClassicOp ops[] = {ClassicOp::Add, ClassicOp::Mul, ClassicOp::Pow};
        const char* names[] = {"+", "*", "^"};
        auto closed = [&](ClassicOp op, const Ordinal& a, const Ordinal& b) {
            switch (op) {
                case ClassicOp::Add: return add(a, b);
                case ClassicOp::Mul: return mul(a, b);
                case ClassicOp::Pow: return pow(a, b, opt.budget);
            }
            return Ordinal{};
        };
        struct Fixed {
            ClassicOp op;
            Ordinal a, b, expect;
        };
        const Fixed fixed[] = {{ClassicOp::Add, nat(1), w(), w()},
                               {ClassicOp::Mul, nat(2), w(), w()},
                               {ClassicOp::Mul, w(), nat(2), add(w(), w())},
                               {ClassicOp::Pow, nat(2), w(), w()},
                               {ClassicOp::Pow, nat(0), w(), nat(1)}};
        for (const Fixed& f : fixed) {
            ++cases;
            if (!(closed(f.op, f.a, f.b) == f.expect) ||
                !(reference_eval(f.op, f.a, f.b, opt.budget) == f.expect))
                detail::fail(r, failures, "fixed vector " + to_text(f.a) + " " + names[static_cast<int>(f.op)] + " " + to_text(f.b));
        }
        const auto corpus = classic_corpus();
        for (int k = 0; k < 3; ++k) {
            ReferenceEvaluator ref(opt.budget);
            for (const Ordinal& a : corpus)
                for (const Ordinal& b : corpus) {
                    ++cases;
                    const Ordinal expect = closed(ops[k], a, b);
                    const Ordinal got = ref.eval(ops[k], a, b);
                    if (!(got == expect))
                        detail::fail(r, failures, to_text(a) + " " + names[k] + " " + to_text(b) + ": recursion gives " +
                                                      to_text(got) + ", closed form " + to_text(expect));
                }
        }
        r.detail = std::to_string(failures) + " mismatches in " + std::to_string(cases) + " cases" +
                   (r.detail.empty() ? "" : "; " + r.detail);
    });
}

inline SuiteResult synth_extends_hyper(const SuiteOptions& opt) {
    return detail::run(5, "synthesis equals hyperoperation on naturals", 5.0, [&](SuiteResult& r) {
        std::size_t failures = 0;
        auto check = [&](unsigned n, unsigned a, unsigned b) {
            SynthesisEngine engine(opt.budget, 1);
            const std::string got = detail::outcome_of([&] { return engine.synth(n, nat(a), nat(b)); });
            r.outcomes.push_back(got);
            const std::string expect = to_text(from_natural(hyper(n, a, b, opt.budget)));
            if (got != expect)
                detail::fail(r, failures, "<" + std::to_string(a) + "," + std::to_string(b) + ">_" + std::to_string(n) +
                                              " = " + got + ", expected " + expect);
        };
        for (unsigned n = 1; n <= 3; ++n)
            for (unsigned a = 0; a <= 8; ++a)
                for (unsigned b = 0; b <= 8; ++b) check(n, a, b);
        for (unsigned a = 0; a <= 3; ++a)
            for (unsigned b = 0; b <= 3; ++b) check(4, a, b);
        for (unsigned b = 0; b <= 3; ++b) check(5, 2, b);
        r.detail = std::to_string(failures) + " mismatches in " + std::to_string(r.outcomes.size()) + " cases" +
                   (r.detail.empty() ? "" : "; " + r.detail);
    });
}

inline SuiteResult synth_extends_classic(const SuiteOptions& opt) {
    return detail::run(6, "synthesis at levels 1-3 equals + * ^", 30.0, [&](SuiteResult& r) {
        std::size_t failures = 0;
        const auto corpus = classic_corpus();
        for (unsigned n = 1; n <= 3; ++n) {
            // The level under test runs from its recursion; lower levels use the
            // closed forms this same suite checks first.
            SynthesisEngine engine(opt.budget, n - 1 == 0 ? 1 : n - 1);
            for (const Ordinal& a : corpus)
                for (const Ordinal& b : corpus) {
                    const std::string got = detail::outcome_of([&] { return engine.synth(n, a, b); });
                    r.outcomes.push_back(got);
                    const Ordinal expect = n == 1 ? add(a, b) : n == 2 ? mul(a, b) : pow(a, b, opt.budget);
                    if (got != to_text(expect))
                        detail::fail(r, failures, "<" + to_text(a) + ", " + to_text(b) + ">_" + std::to_string(n) +
                                                      " = " + got + ", expected " + to_text(expect));
                }
        }
        r.detail = std::to_string(failures) + " mismatches in " + std::to_string(r.outcomes.size()) + " cases" +
                   (r.detail.empty() ? "" : "; " + r.detail);
    });
}

inline SuiteResult monotonicity(const SuiteOptions& opt) {
    return detail::run(7, "strict monotonicity and left cancellation in the right argument", 60.0, [&](SuiteResult& r) {
        std::size_t failures = 0, pairs = 0, skipped = 0;
        const auto betas = monotone_corpus();
        const Ordinal alphas[] = {nat(2), nat(3), w(), successor(w()), omega_power(w())};
        for (unsigned i = 1; i <= 4; ++i)
            for (const Ordinal& a : alphas) {
                SynthesisEngine engine(opt.budget, i == 1 ? 1 : i - 1);
                std::vector<std::optional<Ordinal>> values;
                for (const Ordinal& b : betas) {
                    std::optional<Ordinal> v;
                    const std::string o = detail::outcome_of([&] { return *(v = engine.synth(i, a, b)); });
                    r.outcomes.push_back(o);
                    if (o == "!budget")
                        detail::fail(r, failures, "budget exceeded at <" + to_text(a) + ", " + to_text(b) + ">_" + std::to_string(i));
                    values.push_back(v);
                }
                const std::string where = " for a=" + to_text(a) + ", i=" + std::to_string(i);
                for (std::size_t p = 0; p < betas.size(); ++p)
                    for (std::size_t q = p + 1; q < betas.size(); ++q) {
                        ++pairs;
                        if (!values[p]) {
                            if (values[q]) detail::fail(r, failures, "representable after not representable" + where);
                            ++skipped;
                            continue;
                        }
                        if (!values[q]) {
                            ++skipped;
                            continue;
                        }
                        if (!(*values[p] < *values[q]))
                            detail::fail(r, failures, "not increasing at " + to_text(betas[p]) + " < " + to_text(betas[q]) + where);
                        if (*values[p] == *values[q] && !(betas[p] == betas[q]))
                            detail::fail(r, failures, "cancellation fails" + where);
                    }
            }
        r.detail = std::to_string(failures) + " violations in " + std::to_string(pairs) + " ordered pairs (" +
                   std::to_string(skipped) + " not representable)" + (r.detail.empty() ? "" : "; " + r.detail);
    });
}

inline SuiteResult naive_collapse(const SuiteOptions& opt) {
    return detail::run(8, "naive extension of multiplication collapses above w", 1.0, [&](SuiteResult& r) {
        std::size_t failures = 0;
        const Ordinal alphas[] = {w(), successor(w()), omega_power(nat(2))};
        const Ordinal betas[] = {w(), successor(w()), mul(w(), nat(2)), omega_power(nat(2))};
        for (const Ordinal& a : alphas) {
            SynthesisEngine engine(opt.budget);
            const std::string at_w = detail::outcome_of([&] { return engine.naive_ext(2, a, w()); });
            // alpha * w from the closed-form product is the collapse value.
            if (at_w != to_text(mul(a, w()))) detail::fail(r, failures, "a*'w differs from a*w for a=" + to_text(a));
            for (const Ordinal& b : betas) {
                const std::string got = detail::outcome_of([&] { return engine.naive_ext(2, a, b); });
                r.outcomes.push_back(got);
                if (got != at_w)
                    detail::fail(r, failures, to_text(a) + " *' " + to_text(b) + " = " + got + ", not " + at_w);
            }
        }
        r.detail = std::to_string(failures) + " deviations in " + std::to_string(r.outcomes.size()) + " cases" +
                   (r.detail.empty() ? "" : "; " + r.detail);
    });
}

inline SuiteResult distributivity(const SuiteOptions& opt) {
    return detail::run(9, "distribution over Cantor normal form terms (n = 2, 3, 4)", 30.0, [&](SuiteResult& r) {
        std::size_t failures = 0, checked = 0, skipped = 0;
        const auto corpus = classic_corpus();
        for (unsigned n = 2; n <= 4; ++n) {
            SynthesisEngine engine(opt.budget, n - 1);
            for (const Ordinal& a : corpus)
                for (const Ordinal& b : corpus) {
                    if (repeated_term_count(b) < 2) continue;
                    try {
                        const bool holds = engine.distributes(n, a, b);
                        r.outcomes.push_back(holds ? "true" : "false");
                        ++checked;
                        if (!holds)
                            detail::fail(r, failures, "n=" + std::to_string(n) + ", a=" + to_text(a) + ", b=" + to_text(b));
                    } catch (const NotRepresentable&) {
                        r.outcomes.push_back("!not-representable");
                        ++skipped;
                    } catch (const BudgetExceeded& e) {
                        r.outcomes.push_back("!budget");
                        detail::fail(r, failures, std::string("budget exceeded: ") + e.what());
                    }
                }
        }
        r.detail = std::to_string(failures) + " failures in " + std::to_string(checked) + " triples (" +
                   std::to_string(skipped) + " not representable)" + (r.detail.empty() ? "" : "; " + r.detail);
    });
}

inline SuiteResult main_numbers(const SuiteOptions& opt) {
    return detail::run(10, "infinite main numbers match <w, w^a>_(i+1) by rank", 120.0, [&](SuiteResult& r) {
        std::size_t failures = 0;
        struct Case {
            unsigned i;
            Ordinal bound;
            std::vector<Ordinal> expect;  // from the closed forms
        };
        const Ordinal w3 = omega_power(nat(3));
        std::vector<Case> cases;
        Case c1{1, omega_power(nat(5)), {}};
        for (unsigned a = 0; a <= 4; ++a) c1.expect.push_back(mul(w(), omega_power(nat(a))));
        Case c2{2, omega_power(w3), {}};
        for (unsigned a = 0; a <= 3; ++a) c2.expect.push_back(pow(w(), omega_power(nat(a))));
        cases.push_back(c1);
        cases.push_back(c2);
        cases.push_back(Case{3, omega_power(w()), {w()}});
        for (const Case& c : cases) {
            const LatticeSpec spec = default_lattice_for(c.bound);
            const MainNumberReport rep = enumerate_main_numbers(c.i, c.bound, spec, opt.budget, 1);
            const std::string json = rep.to_json();
            r.outcomes.push_back(json);
            std::vector<Ordinal> infinite;
            for (const Ordinal& m : rep.confirmed)
                if (!m.is_finite()) infinite.push_back(m);
            const std::string tag = "i=" + std::to_string(c.i) + " bound " + to_text(c.bound);
            if (infinite != c.expect) detail::fail(r, failures, tag + ": unexpected main numbers");
            if (rep.matching_convention() != "0-indexed") detail::fail(r, failures, tag + ": rank convention " + rep.matching_convention());
            if (c.i == 3 && (rep.zero_indexed.size() != 2 || rep.zero_indexed[1].expected))
                detail::fail(r, failures, tag + ": next prediction should be not representable");
            for (const Refutation& f : rep.refuted) {
                // Witnesses replay to a value at or above the candidate.
                const std::string v = detail::outcome_of([&] { return synth(c.i, f.left, f.right, opt.budget); });
                const bool reaches = !detail::is_value(v) || !(eval_expr(*parse(v)) < f.candidate);
                if (!(f.left < f.candidate) || !(f.right < f.candidate) || !reaches) {
                    detail::fail(r, failures, tag + ": witness does not replay for " + to_text(f.candidate));
                    break;
                }
            }
            if (c.i <= 2) {
                if (enumerate_main_numbers(c.i, c.bound, spec, opt.budget, 1).to_json() != json)
                    detail::fail(r, failures, tag + ": report differs between runs");
                if (enumerate_main_numbers(c.i, c.bound, spec, opt.budget, std::max(2u, opt.threads)).to_json() != json)
                    detail::fail(r, failures, tag + ": report depends on the thread count");
            }
        }
        r.detail = std::to_string(failures) + " discrepancies over 3 bounds" + (r.detail.empty() ? "" : "; " + r.detail);
    });
}

namespace detail {

inline int run_cli(const std::string& cli, const std::string& expr, std::string& out) {
    const std::string cmd = "'" + cli + "' eval '" + expr + "' 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return -1;
    char buf[256];
    out.clear();
    while (fgets(buf, sizeof buf, pipe)) out += buf;
    const int status = pclose(pipe);
    while (!out.empty() && (out.back() == '\n' || out.back() == '\r')) out.pop_back();
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace detail

inline SuiteResult known_values(const SuiteOptions& opt) {
    const std::string how = opt.cli_path.empty() ? "in-process" : "via the CLI";
    return detail::run(11, "known hard values (" + how + ")", 1.0, [&](SuiteResult& r) {
        struct Known {
            std::string expr;
            int code;
            std::string text;
        };
        const Known known[] = {{"H(4,3,3)", kExitOk, "7625597484987"},
                               {"S(4,2,w+1)", kExitOk, "w^2"},
                               {"S(4,w,w)", kExitNotRepresentable, ""}};
        std::size_t failures = 0;
        double slowest = 0;
        for (const Known& k : known) {
            detail::Stopwatch clock;
            int code;
            std::string out;
            if (opt.cli_path.empty()) {
                const EvalOutcome o = evaluate_text(k.expr, FormatStyle::Text, opt.budget);
                code = o.exit_code;
                out = o.output;
            } else {
                code = detail::run_cli(opt.cli_path, k.expr, out);
            }
            slowest = std::max(slowest, clock.seconds());
            if (code != k.code || (k.code == kExitOk && out != k.text))
                detail::fail(r, failures, k.expr + " gave exit " + std::to_string(code) + " and '" + out + "'");
        }
        std::ostringstream d;
        d << failures << " wrong of 3, slowest " << slowest << " s";
        r.detail = d.str() + (r.detail.empty() ? "" : "; " + r.detail);
    });
}

inline SuiteResult sample_insensitivity(const SuiteOptions& opt, const std::vector<SuiteResult>& base) {
    return detail::run(12, "suites 5-10 unchanged with twice the sup samples", 240.0, [&](SuiteResult& r) {
        SuiteOptions doubled = opt;
        doubled.budget.sup_samples = opt.budget.sup_samples * 2;
        const std::vector<SuiteResult> again = {synth_extends_hyper(doubled), synth_extends_classic(doubled),
                                                monotonicity(doubled),        naive_collapse(doubled),
                                                distributivity(doubled),      main_numbers(doubled)};
        std::size_t failures = 0, compared = 0;
        for (const SuiteResult& b : base) {
            if (b.id < 5 || b.id > 10) continue;
            const auto it = std::find_if(again.begin(), again.end(), [&](const SuiteResult& x) { return x.id == b.id; });
            if (it->outcomes.size() != b.outcomes.size()) {
                detail::fail(r, failures, "suite " + std::to_string(b.id) + " produced a different number of results");
                continue;
            }
            for (std::size_t k = 0; k < b.outcomes.size(); ++k) {
                if (!detail::is_value(b.outcomes[k])) continue;
                ++compared;
                if (it->outcomes[k] != b.outcomes[k])
                    detail::fail(r, failures, "suite " + std::to_string(b.id) + " result " + std::to_string(k) + " changed");
            }
        }
        r.detail = std::to_string(failures) + " changed of " + std::to_string(compared) + " successful results (sup_samples " +
                   std::to_string(opt.budget.sup_samples) + " vs " + std::to_string(doubled.budget.sup_samples) + ")" +
                   (r.detail.empty() ? "" : "; " + r.detail);
    });
}

/// All twelve, in order.
inline std::vector<SuiteResult> run_all(const SuiteOptions& opt) {
    std::vector<SuiteResult> results;
    results.push_back(hyper_closed_forms());
    results.push_back(no_left_identity());
    results.push_back(normal_forms());
    results.push_back(reference_equivalence(opt));
    results.push_back(synth_extends_hyper(opt));
    results.push_back(synth_extends_classic(opt));
    results.push_back(monotonicity(opt));
    results.push_back(naive_collapse(opt));
    results.push_back(distributivity(opt));
    results.push_back(main_numbers(opt));
    results.push_back(known_values(opt));
    results.push_back(sample_insensitivity(opt, results));
    return results;
}

}  // namespace transfinite::suites
