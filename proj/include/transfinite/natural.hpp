#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace transfinite {

/// Arbitrary-precision non-negative integer. Negative values never arise from
/// the operations in this library; callers constructing one directly must not
/// pass a negative value.
using Natural = boost::multiprecision::cpp_int;

inline std::size_t bit_length(const Natural& n) {
    if (n.is_zero()) return 0;
    return boost::multiprecision::msb(n) + 1;
}

inline std::string to_decimal(const Natural& n) { return n.str(); }

/// Parses a run of ASCII digits. Returns false on empty input or a non-digit.
inline bool parse_decimal(std::string_view digits, Natural& out) {
    if (digits.empty()) return false;
    Natural value = 0;
    for (char ch : digits) {
        if (ch < '0' || ch > '9') return false;
        value *= 10;
        value += static_cast<unsigned>(ch - '0');
    }
    out = std::move(value);
    return true;
}

}  // namespace transfinite
