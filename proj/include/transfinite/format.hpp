#pragma once

#include <string>

#include "transfinite/ordinal.hpp"

namespace transfinite {

/// Canonical ASCII text: "w^w*2 + w + 3". Exponents other than a natural or a
/// bare w are parenthesised, so the output parses back to the same value.
inline std::string to_text(const Ordinal& x) {
    if (x.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const Term& t : x.terms()) {
        if (!first) out += " + ";
        first = false;
        const std::string coeff = to_decimal(t.coefficient);
        if (t.exponent.is_zero()) {
            out += coeff;
            continue;
        }
        out += 'w';
        if (!(t.exponent == from_natural(1))) {
            out += '^';
            if (t.exponent.is_finite() || t.exponent == Ordinal::omega())
                out += to_text(t.exponent);
            else
                out += "(" + to_text(t.exponent) + ")";
        }
        if (t.coefficient != 1) out += "*" + coeff;
    }
    return out;
}

/// {"terms":[{"exp":{...},"coeff":"3"}]} with decimal-string coefficients.
inline std::string to_json(const Ordinal& x) {
    std::string out = "{\"terms\":[";
    bool first = true;
    for (const Term& t : x.terms()) {
        if (!first) out += ',';
        first = false;
        out += "{\"exp\":" + to_json(t.exponent) + ",\"coeff\":\"" + to_decimal(t.coefficient) + "\"}";
    }
    out += "]}";
    return out;
}

}  // namespace transfinite
