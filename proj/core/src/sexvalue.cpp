#include "sexag/sexvalue.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "sexag/errors.hpp"

namespace sexag {
namespace {

using digit_vec = std::vector<std::uint8_t>;

constexpr unsigned kBase = 60;

void trim_msd(digit_vec& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

// Compares magnitudes of trimmed vectors.
std::strong_ordering cmp_vec(const digit_vec& a, const digit_vec& b) {
    if (a.size() != b.size()) return a.size() <=> b.size();
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] <=> b[i];
    }
    return std::strong_ordering::equal;
}

digit_vec add_vec(const digit_vec& a, const digit_vec& b) {
    digit_vec out;
    out.reserve(std::max(a.size(), b.size()) + 1);
    unsigned carry = 0;
    for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
        unsigned s = carry;
        if (i < a.size()) s += a[i];
        if (i < b.size()) s += b[i];
        out.push_back(static_cast<std::uint8_t>(s % kBase));
        carry = s / kBase;
    }
    if (carry) out.push_back(static_cast<std::uint8_t>(carry));
    return out;
}

// Requires |a| >= |b|.
digit_vec sub_vec(const digit_vec& a, const digit_vec& b) {
    digit_vec out;
    out.reserve(a.size());
    int borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        int d = static_cast<int>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
        if (d < 0) {
            d += kBase;
            borrow = 1;
        } else {
            borrow = 0;
        }
        out.push_back(static_cast<std::uint8_t>(d));
    }
    trim_msd(out);
    return out;
}

digit_vec mul_vec(const digit_vec& a, const digit_vec& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::uint64_t> acc(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            acc[i + j] += static_cast<std::uint64_t>(a[i]) * b[j];
        }
    }
    digit_vec out(acc.size());
    std::uint64_t carry = 0;
    for (std::size_t k = 0; k < acc.size(); ++k) {
        std::uint64_t t = acc[k] + carry;
        out[k] = static_cast<std::uint8_t>(t % kBase);
        carry = t / kBase;
    }
    while (carry) {
        out.push_back(static_cast<std::uint8_t>(carry % kBase));
        carry /= kBase;
    }
    trim_msd(out);
    return out;
}

digit_vec mul_small(const digit_vec& a, unsigned m) {
    if (m == 0 || a.empty()) return {};
    digit_vec out;
    out.reserve(a.size() + 1);
    unsigned carry = 0;
    for (std::uint8_t d : a) {
        unsigned t = d * m + carry;
        out.push_back(static_cast<std::uint8_t>(t % kBase));
        carry = t / kBase;
    }
    while (carry) {
        out.push_back(static_cast<std::uint8_t>(carry % kBase));
        carry /= kBase;
    }
    return out;
}

// Schoolbook long division, most significant digit down. The per-step
// quotient digit is found by binary search, keeping everything in base 60.
std::pair<digit_vec, digit_vec> divmod_vec(const digit_vec& a, const digit_vec& d) {
    digit_vec quotient(a.size(), 0);
    digit_vec rem;
    for (std::size_t i = a.size(); i-- > 0;) {
        rem.insert(rem.begin(), a[i]);  // rem = rem*60 + digit
        trim_msd(rem);
        unsigned lo = 0, hi = kBase - 1;
        while (lo < hi) {
            unsigned mid = (lo + hi + 1) / 2;
            if (cmp_vec(mul_small(d, mid), rem) <= 0) {
                lo = mid;
            } else {
                hi = mid - 1;
            }
        }
        if (lo) rem = sub_vec(rem, mul_small(d, lo));
        quotient[i] = static_cast<std::uint8_t>(lo);
    }
    trim_msd(quotient);
    return {std::move(quotient), std::move(rem)};
}

// Digits re-expressed at a lower (or equal) point exponent.
digit_vec at_exp(const digit_vec& digits, int from_exp, int to_exp) {
    digit_vec out = digits;
    out.insert(out.begin(), static_cast<std::size_t>(from_exp - to_exp), 0);
    return out;
}

std::strong_ordering reverse(std::strong_ordering o) {
    if (o == std::strong_ordering::less) return std::strong_ordering::greater;
    if (o == std::strong_ordering::greater) return std::strong_ordering::less;
    return std::strong_ordering::equal;
}

}  // namespace

SexValue SexValue::from_parts(Sign sign, std::vector<std::uint8_t> digits_lsd,
                              int point_exp) {
    for (std::uint8_t d : digits_lsd) {
        if (d >= kBase) throw std::invalid_argument("sexagesimal digit out of range");
    }
    // Absorb trailing zeros into the exponent, then strip leading zeros.
    std::size_t drop = 0;
    while (drop < digits_lsd.size() && digits_lsd[drop] == 0) ++drop;
    if (drop) {
        digits_lsd.erase(digits_lsd.begin(), digits_lsd.begin() + static_cast<std::ptrdiff_t>(drop));
        point_exp += static_cast<int>(drop);
    }
    trim_msd(digits_lsd);
    SexValue v;
    if (digits_lsd.empty() || sign == Sign::zero) {
        return v;
    }
    v.sign_ = sign;
    v.digits_ = std::move(digits_lsd);
    v.point_exp_ = point_exp;
    return v;
}

SexValue SexValue::from_int(std::int64_t n) {
    if (n == 0) return {};
    Sign sign = n < 0 ? Sign::negative : Sign::positive;
    std::uint64_t m = n < 0 ? 0 - static_cast<std::uint64_t>(n) : static_cast<std::uint64_t>(n);
    digit_vec digits;
    while (m) {
        digits.push_back(static_cast<std::uint8_t>(m % kBase));
        m /= kBase;
    }
    return from_parts(sign, std::move(digits), 0);
}

SexValue SexValue::parse(std::string_view text) {
    std::size_t pos = 0;
    bool negative = false;
    if (text.empty()) throw parse_error("empty sexagesimal literal", 0, 1);
    if (text[0] == '-') {
        negative = true;
        pos = 1;
    } else if (text.substr(0, 3) == "−") {  // accept the typeset minus
        negative = true;
        pos = 3;
    }
    if (pos >= text.size()) throw parse_error("sign with no digits", 0, static_cast<int>(pos) + 1);

    std::vector<unsigned> int_digits, frac_digits;
    bool seen_semicolon = false;
    std::vector<unsigned>* group = &int_digits;
    while (pos < text.size()) {
        std::size_t tok_start = pos;
        unsigned value = 0;
        std::size_t len = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            if (value < 1000) value = value * 10 + static_cast<unsigned>(text[pos] - '0');
            ++pos;
            ++len;
        }
        if (len == 0) {
            throw parse_error("expected a digit", 0, static_cast<int>(tok_start) + 1);
        }
        if (value >= kBase) {
            std::ostringstream msg;
            msg << "digit " << text.substr(tok_start, len) << " out of range (max 59)";
            throw parse_error(msg.str(), 0, static_cast<int>(tok_start) + 1);
        }
        group->push_back(value);
        if (pos == text.size()) break;
        char sep = text[pos];
        if (sep == ',') {
            ++pos;
        } else if (sep == ';') {
            if (seen_semicolon) {
                throw parse_error("second semicolon in literal", 0, static_cast<int>(pos) + 1);
            }
            seen_semicolon = true;
            group = &frac_digits;
            ++pos;
        } else {
            std::ostringstream msg;
            msg << "unexpected character '" << sep << "' in literal";
            throw parse_error(msg.str(), 0, static_cast<int>(pos) + 1);
        }
        if (pos == text.size()) {
            throw parse_error("literal ends with a separator", 0, static_cast<int>(pos));
        }
    }

    digit_vec digits;
    digits.reserve(int_digits.size() + frac_digits.size());
    for (std::size_t i = frac_digits.size(); i-- > 0;) {
        digits.push_back(static_cast<std::uint8_t>(frac_digits[i]));
    }
    for (std::size_t i = int_digits.size(); i-- > 0;) {
        digits.push_back(static_cast<std::uint8_t>(int_digits[i]));
    }
    return from_parts(negative ? Sign::negative : Sign::positive, std::move(digits),
                      -static_cast<int>(frac_digits.size()));
}

std::string SexValue::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    if (is_negative()) out << '-';
    const int n = static_cast<int>(digits_.size());
    const int highest = point_exp_ + n - 1;
    auto digit_at = [&](int p) -> unsigned {
        int idx = p - point_exp_;
        return (idx >= 0 && idx < n) ? digits_[static_cast<std::size_t>(idx)] : 0;
    };
    for (int p = std::max(highest, 0); p >= 0; --p) {
        out << digit_at(p);
        if (p > 0) out << ',';
    }
    if (point_exp_ < 0) {
        out << ';';
        for (int p = -1; p >= point_exp_; --p) {
            out << digit_at(p);
            if (p > point_exp_) out << ',';
        }
    }
    return out.str();
}

std::vector<int> SexValue::digits() const {
    std::vector<int> out(digits_.size());
    for (std::size_t i = 0; i < digits_.size(); ++i) {
        out[i] = digits_[digits_.size() - 1 - i];
    }
    return out;
}

SexValue SexValue::abs() const {
    SexValue v = *this;
    if (v.sign_ == Sign::negative) v.sign_ = Sign::positive;
    return v;
}

SexValue SexValue::shifted(int k) const {
    if (is_zero()) return {};
    SexValue v = *this;
    v.point_exp_ += k;
    return v;
}

SexValue SexValue::truncated() const {
    if (is_zero() || point_exp_ >= 0) return *this;
    const int n = static_cast<int>(digits_.size());
    if (point_exp_ + n <= 0) return {};  // |value| < 1
    digit_vec kept(digits_.begin() + static_cast<std::ptrdiff_t>(-point_exp_), digits_.end());
    return from_parts(sign_, std::move(kept), 0);
}

SexValue SexValue::fraction() const {
    return *this - truncated();
}

SexValue SexValue::operator-() const {
    SexValue v = *this;
    if (v.sign_ == Sign::negative) {
        v.sign_ = Sign::positive;
    } else if (v.sign_ == Sign::positive) {
        v.sign_ = Sign::negative;
    }
    return v;
}

SexValue operator+(const SexValue& a, const SexValue& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const int e = std::min(a.point_exp_, b.point_exp_);
    digit_vec da = at_exp(a.digits_, a.point_exp_, e);
    digit_vec db = at_exp(b.digits_, b.point_exp_, e);
    if (a.sign_ == b.sign_) {
        return SexValue::from_parts(a.sign_, add_vec(da, db), e);
    }
    const auto order = cmp_vec(da, db);
    if (order == std::strong_ordering::equal) return {};
    if (order > 0) {
        return SexValue::from_parts(a.sign_, sub_vec(da, db), e);
    }
    return SexValue::from_parts(b.sign_, sub_vec(db, da), e);
}

SexValue operator-(const SexValue& a, const SexValue& b) {
    return a + (-b);
}

SexValue operator*(const SexValue& a, const SexValue& b) {
    if (a.is_zero() || b.is_zero()) return {};
    Sign sign = a.sign_ == b.sign_ ? Sign::positive : Sign::negative;
    return SexValue::from_parts(sign, mul_vec(a.digits_, b.digits_),
                                a.point_exp_ + b.point_exp_);
}

bool operator==(const SexValue& a, const SexValue& b) {
    return a.sign_ == b.sign_ && a.point_exp_ == b.point_exp_ && a.digits_ == b.digits_;
}

std::strong_ordering operator<=>(const SexValue& a, const SexValue& b) {
    if (a.sign_ != b.sign_) {
        return static_cast<int>(a.sign_) <=> static_cast<int>(b.sign_);
    }
    if (a.sign_ == Sign::zero) return std::strong_ordering::equal;
    const int e = std::min(a.point_exp_, b.point_exp_);
    const auto mag = cmp_vec(at_exp(a.digits_, a.point_exp_, e),
                             at_exp(b.digits_, b.point_exp_, e));
    return a.sign_ == Sign::positive ? mag : reverse(mag);
}

DivModResult divmod(const SexValue& a, const SexValue& d) {
    if (d.is_zero()) throw std::domain_error("division by zero");
    if (!a.is_integer() || !d.is_integer()) {
        throw std::domain_error("divmod requires integer-valued operands");
    }
    if (a.is_negative()) throw std::domain_error("divmod requires a nonnegative dividend");
    if (d.is_negative()) throw std::domain_error("divmod requires a positive divisor");
    if (a.is_zero()) return {SexValue{}, SexValue{}};
    digit_vec da = at_exp(a.digits_, a.point_exp_, 0);
    digit_vec dd = at_exp(d.digits_, d.point_exp_, 0);
    auto [q, r] = divmod_vec(da, dd);
    return {SexValue::from_parts(Sign::positive, std::move(q), 0),
            SexValue::from_parts(Sign::positive, std::move(r), 0)};
}

SexValue pow(const SexValue& base, unsigned exponent) {
    SexValue result = SexValue::from_int(1);
    SexValue acc = base;
    unsigned n = exponent;
    while (n) {
        if (n & 1u) result = result * acc;
        n >>= 1u;
        if (n) acc = acc * acc;
    }
    return result;
}

SexValue round_to_multiple(const SexValue& x, const SexValue& step) {
    if (!step.is_positive()) throw std::domain_error("rounding step must be positive");
    if (x.is_zero()) return {};
    const int e = std::min(x.point_exp_, step.point_exp_);
    digit_vec dx = at_exp(x.digits_, x.point_exp_, e);
    digit_vec ds = at_exp(step.digits_, step.point_exp_, e);
    auto [q, r] = divmod_vec(dx, ds);
    // Ties go away from zero: we work on |x|, so a tie rounds |q| up.
    if (cmp_vec(mul_small(r, 2), ds) >= 0) {
        q = add_vec(q, digit_vec{1});
    }
    return SexValue::from_parts(x.sign_, std::move(q), 0) * step;
}

std::int64_t to_int64(const SexValue& v) {
    // Accumulate the magnitude unsigned so INT64_MIN stays reachable.
    const std::uint64_t mag = to_uint64(v.abs());
    const std::uint64_t limit =
        static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()) +
        (v.is_negative() ? 1u : 0u);
    if (mag > limit) throw std::overflow_error("sexagesimal value out of int64 range");
    return v.is_negative() ? -static_cast<std::int64_t>(mag - 1) - 1
                           : static_cast<std::int64_t>(mag);
}

std::uint64_t to_uint64(const SexValue& v) {
    if (v.is_negative()) throw std::domain_error("value is negative");
    if (!v.is_integer()) throw std::domain_error("value is not an integer");
    if (v.is_zero()) return 0;
    constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t acc = 0;
    for (int d : v.digits()) {
        if (acc > (kMax - static_cast<unsigned>(d)) / 60) {
            throw std::overflow_error("sexagesimal value out of uint64 range");
        }
        acc = acc * 60 + static_cast<unsigned>(d);
    }
    for (int i = 0; i < v.point_exp(); ++i) {
        if (acc > kMax / 60) throw std::overflow_error("sexagesimal value out of uint64 range");
        acc *= 60;
    }
    return acc;
}

std::ostream& operator<<(std::ostream& os, const SexValue& v) {
    return os << v.str();
}

}  // namespace sexag
