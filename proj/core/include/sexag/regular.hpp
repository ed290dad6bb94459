#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sexag/sexvalue.hpp"

namespace sexag {

/// Factor profile of a positive integer against the base:
/// n = 2^alpha * 3^beta * 5^gamma * residue with gcd(residue, 30) == 1.
/// The number is regular (has a finite base-60 reciprocal) iff residue == 1.
struct RegularityWitness {
    unsigned alpha = 0;
    unsigned beta = 0;
    unsigned gamma = 0;
    std::uint64_t residue = 1;

    bool regular() const noexcept { return residue == 1; }

    /// Upper bound on the fractional digit count of the reciprocal:
    /// max(ceil(alpha/2), beta, gamma).
    unsigned reciprocal_digit_bound() const noexcept;
};

/// Thrown when an exact reciprocal is requested for a number that has none.
/// residue() is the offending factor, coprime to 60.
class irregular_error : public std::domain_error {
public:
    irregular_error(const std::string& what, std::uint64_t residue)
        : std::domain_error(what), residue_(residue) {}

    std::uint64_t residue() const noexcept { return residue_; }

private:
    std::uint64_t residue_;
};

/// Strips all factors of 2, 3 and 5 from n. Requires n >= 1.
RegularityWitness strip_235(std::uint64_t n);

bool is_regular(std::uint64_t n);

/// A positive value is regular when its digit string, read as an integer,
/// is; the sexagesimal point does not matter. Zero and negatives are not.
bool is_regular(const SexValue& v);

/// Exact reciprocal of a regular integer, computed by base-60 long
/// division. Throws irregular_error when n is irregular, std::domain_error
/// when n == 0.
SexValue reciprocal(std::uint64_t n);

/// Reciprocal of a positive value: the mantissa reciprocal with the point
/// mirrored, so reciprocal_value(18) == 0;3,20 and
/// reciprocal_value(0;3,20) == 18. Throws irregular_error for irregular
/// mantissas, std::domain_error for values <= 0, std::overflow_error when
/// the mantissa exceeds 64 bits.
SexValue reciprocal_value(const SexValue& v);

/// All regular numbers in [1, limit] with their reciprocals, ascending.
std::vector<std::pair<std::uint64_t, SexValue>> reciprocal_table(std::uint64_t limit);

}  // namespace sexag
