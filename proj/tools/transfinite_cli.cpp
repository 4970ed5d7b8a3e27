// Command-line calculator for ordinals below epsilon_0.
//
//   transfinite eval "S(4,2,w+1)"
//   transfinite cmp "1+w" "w"
//   transfinite table --op H --index 3 --rows 5 --cols 5
//   transfinite mains --index 2 --bound "w^(w^3)"
//   transfinite selftest
//
// Exit codes: 0 ok, 1 usage, 2 parse error, 3 budget exceeded,
// 4 not representable, 5 domain error.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "transfinite/calculator.hpp"
#include "transfinite/explorer.hpp"
#include "transfinite/suites.hpp"

namespace tf = transfinite;

namespace {

struct BudgetFlags {
    std::size_t sup_samples = 0;
    std::size_t max_depth = 0;
    std::size_t max_bits = 0;

    void attach(CLI::App* cmd) {
        cmd->add_option("--sup-samples", sup_samples, "samples per supremum (default 8)")->check(CLI::Range(3, 1000));
        cmd->add_option("--max-depth", max_depth, "nested evaluation frames (default 2000)")->check(CLI::PositiveNumber);
        cmd->add_option("--max-bits", max_bits, "largest natural number, in bits (default 65536)")->check(CLI::PositiveNumber);
    }

    tf::EvalBudget resolve() const {
        tf::EvalBudget b = tf::budget_from_environment();
        if (sup_samples) b.sup_samples = sup_samples;
        if (max_depth) b.max_depth = max_depth;
        if (max_bits) b.max_bits = max_bits;
        return b;
    }
};

int report(const tf::EvalOutcome& o) {
    if (o.exit_code == tf::kExitOk)
        std::cout << o.output << "\n";
    else
        std::cerr << o.error << "\n";
    return o.exit_code;
}

tf::EvalOutcome evaluate(const std::string& text, const tf::EvalBudget& budget, tf::Ordinal& value) {
    return tf::evaluate_text(text, tf::FormatStyle::Text, budget, &value);
}

std::string table_cell(char op, unsigned n, unsigned a, unsigned b, const tf::EvalBudget& budget) {
    try {
        switch (op) {
            case 'H': return tf::to_decimal(tf::hyper(n, a, b, budget));
            case 'L': return tf::to_decimal(tf::left_hyper(n, a, b, budget));
            default: return tf::to_text(tf::synth(n, tf::from_natural(a), tf::from_natural(b), budget));
        }
    } catch (const tf::BudgetExceeded&) {
        return "budget";
    } catch (const tf::NotRepresentable&) {
        return "eps0";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact ordinal arithmetic below epsilon_0"};
    app.require_subcommand(1);

    std::string format = "text";
    std::string expr;
    BudgetFlags eval_flags;
    auto* eval = app.add_subcommand("eval", "evaluate an expression");
    eval->add_option("expr", expr, "expression, e.g. \"w^(w+1)*3 + 5\"")->required();
    eval->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    eval_flags.attach(eval);

    std::string left, right;
    BudgetFlags cmp_flags;
    auto* cmp = app.add_subcommand("cmp", "compare two expressions, printing <, = or >");
    cmp->add_option("left", left)->required();
    cmp->add_option("right", right)->required();
    cmp_flags.attach(cmp);

    std::string op = "H";
    unsigned index = 1, rows = 5, cols = 5;
    BudgetFlags table_flags;
    auto* table = app.add_subcommand("table", "value table of an operation on small naturals");
    table->add_option("--op", op, "H (hyperoperation), L (left-iterated) or S (synthesis)")
        ->check(CLI::IsMember({"H", "L", "S"}));
    table->add_option("--index", index, "operation index")->required()->check(CLI::Range(1, 1000000));
    table->add_option("--rows", rows, "left operands 0 .. rows-1")->check(CLI::Range(1, 1000));
    table->add_option("--cols", cols, "right operands 0 .. cols-1")->check(CLI::Range(1, 1000));
    table_flags.attach(table);

    unsigned mains_index = 1, threads = 1;
    std::string bound;
    std::size_t depth = 0, terms = 0;
    unsigned coeff = 0;
    BudgetFlags mains_flags;
    auto* mains = app.add_subcommand("mains", "search main numbers below a bound; prints a JSON report");
    mains->add_option("--index", mains_index, "operation index")->required()->check(CLI::Range(1, 1000000));
    mains->add_option("--bound", bound, "largest candidate, an expression")->required();
    mains->add_option("--depth", depth, "lattice tree height (default from the bound)")->check(CLI::Range(1, 8));
    mains->add_option("--coeff", coeff, "lattice coefficient cap (default from the bound)")->check(CLI::Range(1, 64));
    mains->add_option("--terms", terms, "lattice term cap (default 2)")->check(CLI::Range(1, 8));
    mains->add_option("--threads", threads, "worker threads")->check(CLI::Range(1, 256));
    mains_flags.attach(mains);

    auto* selftest = app.add_subcommand("selftest", "run the oracle and property suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : tf::kExitUsage;
    }

    try {
        if (*eval) {
            const auto style = format == "json" ? tf::FormatStyle::Json : tf::FormatStyle::Text;
            return report(tf::evaluate_text(expr, style, eval_flags.resolve()));
        }
        if (*cmp) {
            const tf::EvalBudget budget = cmp_flags.resolve();
            tf::Ordinal a, b;
            if (auto o = evaluate(left, budget, a); o.exit_code != tf::kExitOk) return report(o);
            if (auto o = evaluate(right, budget, b); o.exit_code != tf::kExitOk) return report(o);
            std::cout << (a < b ? "<" : a == b ? "=" : ">") << "\n";
            return tf::kExitOk;
        }
        if (*table) {
            const tf::EvalBudget budget = table_flags.resolve();
            std::cout << "a\\b";
            for (unsigned b = 0; b < cols; ++b) std::cout << '\t' << b;
            std::cout << "\n";
            for (unsigned a = 0; a < rows; ++a) {
                std::cout << a;
                for (unsigned b = 0; b < cols; ++b) std::cout << '\t' << table_cell(op[0], index, a, b, budget);
                std::cout << "\n";
            }
            return tf::kExitOk;
        }
        if (*mains) {
            const tf::EvalBudget budget = mains_flags.resolve();
            tf::Ordinal b;
            if (auto o = evaluate(bound, budget, b); o.exit_code != tf::kExitOk) return report(o);
            tf::LatticeSpec spec = tf::default_lattice_for(b);
            if (depth) spec.max_depth = depth;
            if (coeff) spec.max_coeff = coeff;
            if (terms) spec.max_terms = terms;
            std::cout << tf::enumerate_main_numbers(mains_index, b, spec, budget, threads).to_json() << "\n";
            return tf::kExitOk;
        }
        if (*selftest) {
            tf::suites::SuiteOptions opt;
            opt.budget = tf::budget_from_environment();
            int failed = 0;
            const auto results = tf::suites::run_all(opt);
            for (const auto& r : results) {
                std::cout << tf::suites::line(r) << std::endl;
                if (!r.passed()) ++failed;
            }
            std::cout << (results.size() - failed) << "/" << results.size() << " suites passed\n";
            return failed == 0 ? tf::kExitOk : 1;
        }
    } catch (const tf::NotRepresentable& e) {
        std::cerr << "not representable below epsilon_0: " << e.what() << "\n";
        return tf::kExitNotRepresentable;
    } catch (const tf::BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return tf::kExitBudget;
    } catch (const tf::DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return tf::kExitDomain;
    }
    return tf::kExitUsage;
}
