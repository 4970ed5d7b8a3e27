#pragma once

// Surface syntax for ordinal expressions.
//
//   expr := sum
//   sum  := prod ("+" prod)*
//   prod := pw ("*" pw)*
//   pw   := atom ("^" pw)?                 right associative, binds tightest
//   atom := "w" | NAT | "(" expr ")" | FUNC
//   FUNC := ("H" | "L") "(" NAT "," NAT "," NAT ")"
//         | ("S" | "N") "(" NAT "," expr "," expr ")"
//
// H is the hyperoperation, L its left-iterated variant, S the synthesis
// operation and N the naive transfinite extension. The first argument of each
// function form is the operation index.

#include <cctype>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

#include "transfinite/budget.hpp"
#include "transfinite/classic_ops.hpp"
#include "transfinite/errors.hpp"
#include "transfinite/format.hpp"
#include "transfinite/hyperops.hpp"
#include "transfinite/ordinal.hpp"
#include "transfinite/synthesis.hpp"

namespace transfinite {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

namespace expr {
struct NatLit { Natural value; };
struct Omega {};
struct Add { ExprPtr left, right; };
struct Mul { ExprPtr left, right; };
struct Pow { ExprPtr left, right; };
struct Hyper { OpIndex index; Natural a, b; };
struct LeftHyper { OpIndex index; Natural a, b; };
struct Synth { OpIndex index; ExprPtr left, right; };
struct NaiveExt { OpIndex index; ExprPtr left, right; };
}  // namespace expr

struct Expr {
    std::variant<expr::NatLit, expr::Omega, expr::Add, expr::Mul, expr::Pow, expr::Hyper,
                 expr::LeftHyper, expr::Synth, expr::NaiveExt>
        node;
};

namespace detail {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    ExprPtr parse_all() {
        ExprPtr e = parse_sum();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) {
            if (pos_ >= text_.size()) fail(std::string("expected '") + c + "' but input ended");
            fail(std::string("expected '") + c + "'");
        }
    }

    static ExprPtr make(auto node) { return std::make_shared<const Expr>(Expr{std::move(node)}); }

    ExprPtr parse_sum() {
        ExprPtr left = parse_prod();
        while (accept('+')) left = make(expr::Add{left, parse_prod()});
        return left;
    }

    ExprPtr parse_prod() {
        ExprPtr left = parse_pow();
        while (accept('*')) left = make(expr::Mul{left, parse_pow()});
        return left;
    }

    ExprPtr parse_pow() {
        ExprPtr base = parse_atom();
        if (accept('^')) return make(expr::Pow{base, parse_pow()});
        return base;
    }

    Natural parse_nat() {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        Natural value;
        if (!parse_decimal(text_.substr(start, pos_ - start), value)) {
            pos_ = start;
            fail("expected a natural number");
        }
        return value;
    }

    OpIndex parse_index() {
        skip_space();
        const std::size_t start = pos_;
        Natural n = parse_nat();
        if (n.is_zero()) {
            pos_ = start;
            fail("operation index must be at least 1");
        }
        if (n > 1000000) {
            pos_ = start;
            fail("operation index is too large");
        }
        return OpIndex(static_cast<unsigned>(n));
    }

    ExprPtr parse_atom() {
        skip_space();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        const char c = text_[pos_];
        if (c == 'w') {
            ++pos_;
            return make(expr::Omega{});
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return make(expr::NatLit{parse_nat()});
        if (c == '(') {
            ++pos_;
            ExprPtr inner = parse_sum();
            expect(')');
            return inner;
        }
        if (c == 'H' || c == 'L') {
            ++pos_;
            expect('(');
            OpIndex n = parse_index();
            expect(',');
            Natural a = parse_nat();
            expect(',');
            Natural b = parse_nat();
            expect(')');
            if (c == 'H') return make(expr::Hyper{n, std::move(a), std::move(b)});
            return make(expr::LeftHyper{n, std::move(a), std::move(b)});
        }
        if (c == 'S' || c == 'N') {
            ++pos_;
            expect('(');
            OpIndex n = parse_index();
            expect(',');
            ExprPtr left = parse_sum();
            expect(',');
            ExprPtr right = parse_sum();
            expect(')');
            if (c == 'S') return make(expr::Synth{n, left, right});
            return make(expr::NaiveExt{n, left, right});
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

template <class... Fs>
struct Overloaded : Fs... {
    using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

}  // namespace detail

inline ExprPtr parse(std::string_view text) { return detail::Parser(text).parse_all(); }

/// Fully parenthesised constructor form, e.g. "Add(Mul(Pow(w, Add(w, 1)), 3), 5)".
inline std::string describe(const Expr& e) {
    return std::visit(
        detail::Overloaded{
            [](const expr::NatLit& n) { return to_decimal(n.value); },
            [](const expr::Omega&) { return std::string("w"); },
            [](const expr::Add& x) { return "Add(" + describe(*x.left) + ", " + describe(*x.right) + ")"; },
            [](const expr::Mul& x) { return "Mul(" + describe(*x.left) + ", " + describe(*x.right) + ")"; },
            [](const expr::Pow& x) { return "Pow(" + describe(*x.left) + ", " + describe(*x.right) + ")"; },
            [](const expr::Hyper& x) {
                return "Hyper(" + std::to_string(x.index.value()) + ", " + to_decimal(x.a) + ", " +
                       to_decimal(x.b) + ")";
            },
            [](const expr::LeftHyper& x) {
                return "LeftHyper(" + std::to_string(x.index.value()) + ", " + to_decimal(x.a) + ", " +
                       to_decimal(x.b) + ")";
            },
            [](const expr::Synth& x) {
                return "Synth(" + std::to_string(x.index.value()) + ", " + describe(*x.left) + ", " +
                       describe(*x.right) + ")";
            },
            [](const expr::NaiveExt& x) {
                return "NaiveExt(" + std::to_string(x.index.value()) + ", " + describe(*x.left) + ", " +
                       describe(*x.right) + ")";
            },
        },
        e.node);
}

/// Evaluates with the closed-form + * ^ and the synthesis engine; one memo
/// table is shared across the whole expression.
inline Ordinal eval_expr(const Expr& e, SynthesisEngine& engine) {
    const EvalBudget& budget = engine.budget();
    return std::visit(
        detail::Overloaded{
            [&](const expr::NatLit& n) {
                check_bits(n.value, budget);
                return from_natural(n.value);
            },
            [&](const expr::Omega&) { return Ordinal::omega(); },
            [&](const expr::Add& x) { return add(eval_expr(*x.left, engine), eval_expr(*x.right, engine)); },
            [&](const expr::Mul& x) { return mul(eval_expr(*x.left, engine), eval_expr(*x.right, engine)); },
            [&](const expr::Pow& x) {
                return pow(eval_expr(*x.left, engine), eval_expr(*x.right, engine), budget);
            },
            [&](const expr::Hyper& x) { return from_natural(hyper(x.index, x.a, x.b, budget)); },
            [&](const expr::LeftHyper& x) { return from_natural(left_hyper(x.index, x.a, x.b, budget)); },
            [&](const expr::Synth& x) {
                return engine.synth(x.index, eval_expr(*x.left, engine), eval_expr(*x.right, engine));
            },
            [&](const expr::NaiveExt& x) {
                return engine.naive_ext(x.index, eval_expr(*x.left, engine), eval_expr(*x.right, engine));
            },
        },
        e.node);
}

inline Ordinal eval_expr(const Expr& e, const EvalBudget& budget = {}) {
    SynthesisEngine engine(budget);
    return eval_expr(e, engine);
}

enum class FormatStyle { Text, Json };

inline std::string format(const Ordinal& x, FormatStyle style = FormatStyle::Text) {
    return style == FormatStyle::Text ? to_text(x) : to_json(x);
}

}  // namespace transfinite
