#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "sexag/sexvalue.hpp"

namespace sexag {

/// Outcome of evaluating an expression. `remainder` is set only by
/// remainder division, and then the printable form is "Q r R".
struct CalcResult {
    SexValue value;
    std::optional<SexValue> remainder;

    std::string str() const;
};

/// Evaluates an arithmetic expression over sexagesimal literals.
///
/// Operators: + -, * (binds tighter), / or the division sign, ^k for a
/// whole nonnegative power, unary minus, parentheses; ASCII and the
/// typographic signs are interchangeable. All binary operators associate
/// left. Division demands a regular divisor and multiplies by its
/// reciprocal; with `divmod` set, the expression must instead be one
/// top-level division, answered as quotient and remainder.
///
/// Throws parse_error for malformed expressions (including a nested "/"
/// under `divmod`), irregular_error for an irregular divisor, and
/// std::domain_error for the remaining value errors (division by zero,
/// oversized exponent, remainder division of non-integers).
CalcResult evaluate_expression(std::string_view text, bool divmod = false);

}  // namespace sexag
