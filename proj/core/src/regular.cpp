#include "sexag/regular.hpp"

#include <algorithm>
#include <sstream>

namespace sexag {

unsigned RegularityWitness::reciprocal_digit_bound() const noexcept {
    return std::max({(alpha + 1) / 2, beta, gamma});
}

RegularityWitness strip_235(std::uint64_t n) {
    if (n == 0) throw std::domain_error("zero has no factor profile");
    RegularityWitness w;
    while (n % 2 == 0) {
        n /= 2;
        ++w.alpha;
    }
    while (n % 3 == 0) {
        n /= 3;
        ++w.beta;
    }
    while (n % 5 == 0) {
        n /= 5;
        ++w.gamma;
    }
    w.residue = n;
    return w;
}

bool is_regular(std::uint64_t n) {
    return n != 0 && strip_235(n).regular();
}

bool is_regular(const SexValue& v) {
    if (!v.is_positive()) return false;
    // The mantissa is the digit string as an integer; shifting it into
    // integer position never changes divisibility by 2, 3 or 5.
    return is_regular(to_uint64(v.shifted(-v.point_exp())));
}

SexValue reciprocal(std::uint64_t n) {
    if (n == 0) throw std::domain_error("zero has no reciprocal");
    const auto w = strip_235(n);
    if (!w.regular()) {
        std::ostringstream msg;
        msg << n << " is irregular: factor " << w.residue << " remains after 2, 3, 5";
        throw irregular_error(msg.str(), w.residue);
    }
    if (n == 1) return SexValue::from_int(1);
    // Long division of 1 by n: push the remainder up one place, take the
    // quotient digit, keep the rest. Terminates within the witness bound.
    std::vector<std::uint8_t> frac_msd;
    std::uint64_t r = 1;
    while (r != 0) {
        const auto t = static_cast<unsigned __int128>(r) * 60;
        frac_msd.push_back(static_cast<std::uint8_t>(t / n));
        r = static_cast<std::uint64_t>(t % n);
    }
    std::vector<std::uint8_t> lsd(frac_msd.rbegin(), frac_msd.rend());
    const int count = static_cast<int>(frac_msd.size());
    return SexValue::from_parts(Sign::positive, std::move(lsd), -count);
}

SexValue reciprocal_value(const SexValue& v) {
    if (!v.is_positive()) throw std::domain_error("reciprocal requires a positive value");
    const int p = v.point_exp();
    const std::uint64_t mantissa = to_uint64(v.shifted(-p));
    return reciprocal(mantissa).shifted(-p);
}

std::vector<std::pair<std::uint64_t, SexValue>> reciprocal_table(std::uint64_t limit) {
    std::vector<std::uint64_t> regulars;
    for (std::uint64_t a = 1; a <= limit; a *= 2) {
        for (std::uint64_t b = a; b <= limit; b *= 3) {
            for (std::uint64_t c = b; c <= limit; c *= 5) {
                regulars.push_back(c);
                if (c > limit / 5) break;
            }
            if (b > limit / 3) break;
        }
        if (a > limit / 2) break;
    }
    std::sort(regulars.begin(), regulars.end());
    std::vector<std::pair<std::uint64_t, SexValue>> table;
    table.reserve(regulars.size());
    for (std::uint64_t n : regulars) {
        table.emplace_back(n, reciprocal(n));
    }
    return table;
}

}  // namespace sexag
