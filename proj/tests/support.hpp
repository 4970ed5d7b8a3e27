#pragma once

#include <string_view>

#include "transfinite/format.hpp"
#include "transfinite/notation.hpp"

namespace testing_support {

// Ordinal literal from the surface syntax, e.g. O("w^2 + 3").
inline transfinite::Ordinal O(std::string_view text) {
    return transfinite::eval_expr(*transfinite::parse(text));
}

}  // namespace testing_support
