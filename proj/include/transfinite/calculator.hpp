#pragma once

// Text in, text out: parse, evaluate and format one expression, mapping each
// failure to the calculator's exit code.

#include <cstdlib>
#include <string>
#include <string_view>

#include "transfinite/budget.hpp"
#include "transfinite/errors.hpp"
#include "transfinite/notation.hpp"

namespace transfinite {

enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,
    kExitParse = 2,
    kExitBudget = 3,
    kExitNotRepresentable = 4,
    kExitDomain = 5,
};

struct EvalOutcome {
    int exit_code = kExitOk;
    std::string output;  // formatted value on success
    std::string error;   // message otherwise
};

/// On success the value is also stored in *value when given.
inline EvalOutcome evaluate_text(std::string_view text, FormatStyle style = FormatStyle::Text,
                                 const EvalBudget& budget = {}, Ordinal* value = nullptr) {
    EvalOutcome out;
    try {
        const ExprPtr e = parse(text);
        const Ordinal v = eval_expr(*e, budget);
        out.output = format(v, style);
        if (value) *value = v;
    } catch (const ParseError& err) {
        out.exit_code = kExitParse;
        out.error = std::string("parse error: ") + err.what();
    } catch (const NotRepresentable& err) {
        out.exit_code = kExitNotRepresentable;
        out.error = std::string("not representable below epsilon_0: ") + err.what();
    } catch (const BudgetExceeded& err) {
        out.exit_code = kExitBudget;
        out.error = std::string("budget exceeded: ") + err.what();
    } catch (const DomainError& err) {
        out.exit_code = kExitDomain;
        out.error = std::string("domain error: ") + err.what();
    }
    return out;
}

/// EvalBudget defaults with TRANSFINITE_BUDGET_BITS applied when set.
inline EvalBudget budget_from_environment() {
    EvalBudget budget;
    if (const char* bits = std::getenv("TRANSFINITE_BUDGET_BITS")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(bits, &end, 10);
        if (end == bits || *end != '\0' || v == 0)
            throw DomainError("TRANSFINITE_BUDGET_BITS must be a positive integer");
        budget.max_bits = static_cast<std::size_t>(v);
    }
    return budget;
}

}  // namespace transfinite
