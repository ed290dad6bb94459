#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace sexag {

enum class Sign : int { negative = -1, zero = 0, positive = 1 };

class SexValue;
struct DivModResult;

/// Euclidean division of integer-valued operands: a = q*d + r with
/// 0 <= r < d. Requires a >= 0 and d > 0, both integer-valued; throws
/// std::domain_error otherwise (d == 0 included).
DivModResult divmod(const SexValue& a, const SexValue& d);

/// The multiple of `step` nearest to `x`; ties round away from zero.
/// Requires step > 0. |result - x| <= step/2.
SexValue round_to_multiple(const SexValue& x, const SexValue& step);

/// An exact signed base-60 number: a digit vector plus a point exponent.
///
/// The value is sign * sum(digit[i] * 60^(point_exp + i)) with digits stored
/// least significant first. Canonical form has a nonzero digit at both ends
/// of the vector (trailing zeros are absorbed into point_exp); the zero value
/// has an empty digit vector and point_exp 0. Every operation returns
/// canonical values, and all arithmetic is carried out digit-wise in base 60.
///
/// Literals use the modern transcription convention: comma-separated digits
/// with a semicolon before any fractional digits, e.g. "2,41,0" (= 9660),
/// "0;3,20" (= 1/18), "7;29,29,32,50,22,13,20". The semicolon is an explicit
/// anachronism confined to I/O; no such symbol existed on the tablets.
class SexValue {
public:
    /// Zero.
    SexValue() = default;

    static SexValue from_int(std::int64_t n);

    /// Builds a value from raw parts and canonicalizes. `digits_lsd` is
    /// least significant first; all-zero digits yield zero regardless of
    /// sign. Throws std::invalid_argument if any digit is >= 60.
    static SexValue from_parts(Sign sign, std::vector<std::uint8_t> digits_lsd,
                               int point_exp);

    /// Parses a literal. Throws parse_error (with a 1-based column) on an
    /// empty string, a digit token >= 60, a second semicolon, or any
    /// non-digit token.
    static SexValue parse(std::string_view text);

    /// Canonical literal spelling: no leading zeros, no sign on zero or
    /// positive values, ";" only when fractional digits exist.
    std::string str() const;

    Sign sign() const noexcept { return sign_; }
    bool is_zero() const noexcept { return sign_ == Sign::zero; }
    bool is_negative() const noexcept { return sign_ == Sign::negative; }
    bool is_positive() const noexcept { return sign_ == Sign::positive; }

    /// True when the value is an exact integer.
    bool is_integer() const noexcept { return is_zero() || point_exp_ >= 0; }

    /// Power of 60 attached to the least significant stored digit.
    int point_exp() const noexcept { return point_exp_; }

    std::size_t digit_count() const noexcept { return digits_.size(); }

    /// Digits most significant first, as a literal would show them.
    std::vector<int> digits() const;

    SexValue abs() const;

    /// The value times 60^k (shifts the sexagesimal point).
    SexValue shifted(int k) const;

    /// Integer part truncated toward zero.
    SexValue truncated() const;

    /// Fractional part: *this - truncated(). Carries this value's sign.
    SexValue fraction() const;

    friend SexValue operator+(const SexValue& a, const SexValue& b);
    friend SexValue operator-(const SexValue& a, const SexValue& b);
    friend SexValue operator*(const SexValue& a, const SexValue& b);
    SexValue operator-() const;

    friend bool operator==(const SexValue& a, const SexValue& b);
    friend std::strong_ordering operator<=>(const SexValue& a, const SexValue& b);

private:
    Sign sign_ = Sign::zero;
    std::vector<std::uint8_t> digits_;  // base-60, least significant first
    int point_exp_ = 0;

    friend DivModResult sexag::divmod(const SexValue& a, const SexValue& d);
    friend SexValue sexag::round_to_multiple(const SexValue& x, const SexValue& step);
};

struct DivModResult {
    SexValue quotient;
    SexValue remainder;
};

/// Exact n-th power; pow(a, 0) == 1.
SexValue pow(const SexValue& base, unsigned exponent);

/// Exact conversion to a machine integer. Throws std::domain_error when the
/// value is not an integer and std::overflow_error when out of range.
std::int64_t to_int64(const SexValue& v);
std::uint64_t to_uint64(const SexValue& v);

std::ostream& operator<<(std::ostream& os, const SexValue& v);

}  // namespace sexag
