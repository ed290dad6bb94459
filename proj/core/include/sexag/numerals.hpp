#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace sexag {

/// Upper bound (exclusive) of the numeral word grammar: 60^4.
inline constexpr std::uint32_t kWordLimit = 12'960'000;

/// The Sumerian numeral vocabulary. ash and dish are synonyms for 1;
/// geshta_u is the irregular word for exactly 70.
enum class Word {
    ash,      // aš = 1
    dish,     // diš = 1
    min,      // min = 2
    esh,      // eš₅ = 3
    limmu,    // limmu = 4
    ia,       // iá = 5
    ash3,     // àš = 6
    imin,     // imin = 7
    ussu,     // ussu = 8
    ilimmu,   // ilimmu = 9
    u,        // u = 10
    nish,     // niš = 20
    ushu,     // ùšu = 30
    nimin,    // nimin = 40
    ninnu,    // ninnu = 50
    gesh,     // géš = 60
    geshta_u, // gešta-u = 70, "ten after sixty"
    gesh_u,   // géš-u = 600, "ten sixties"
    shar,     // šár = 3600
    shar_gal, // šár-gal = 216000, "big šár"
};

/// Canonical spelling with diacritics, e.g. "géš-u".
std::string_view word_text(Word w);

std::uint32_t word_value(Word w) noexcept;

struct NumeralItem {
    Word unit;
    unsigned multiplier = 1;
};

/// A validated numeral word sequence. Items run in strictly descending
/// unit value; multipliers beyond 1 occur only on the sixty-ladder words,
/// capped as the greedy rendering produces them (géš <= 9, géš-u <= 5,
/// šár and šár-gal <= 59); the total is in [1, 60^4).
///
/// Text form: items separated by spaces, multipliers and compound words
/// bound by hyphens. The separator is meaningful: "géš-u" is the unit 600
/// while "géš u" is 60 followed by 10, and "šár-min" is 2 x 3600 while
/// "šár min" is 3600 + 2. A tens word and a following units word join with
/// a hyphen (ninnu-iá = 55).
class NumeralPhrase {
public:
    /// Validates and builds a phrase. Throws std::invalid_argument on a
    /// multiplier out of range, ascending unit order, or duplicate level.
    static NumeralPhrase from_items(std::vector<NumeralItem> items);

    /// Parses phrase text. Accepts canonical diacritics and plain-ASCII
    /// transliterations (šár = shar2 = šar, eš₅ = esz5 = es); throws
    /// parse_error naming the offending token.
    static NumeralPhrase parse(std::string_view text);

    const std::vector<NumeralItem>& items() const noexcept { return items_; }

    std::uint32_t value() const noexcept;

    /// Canonical spelling with diacritics.
    std::string str() const;

private:
    NumeralPhrase() = default;
    std::vector<NumeralItem> items_;
};

/// Greedy rendering of n as numeral words; 70 takes its attested irregular
/// form gešta-u. Throws std::out_of_range unless 1 <= n < 60^4.
NumeralPhrase int_to_words(std::uint32_t n);

std::uint32_t words_to_int(const NumeralPhrase& phrase) noexcept;

/// Parses and evaluates phrase text in one step.
std::uint32_t words_to_int(std::string_view text);

enum class SignStyle { round, wedge };

/// A count of number signs per sign value, descending. Both styles share
/// the same value ladder {216000, 3600, 600, 60, 10, 1}; the style only
/// selects the transliteration tag.
struct SignTally {
    SignStyle style = SignStyle::wedge;
    std::map<std::uint32_t, unsigned, std::greater<>> counts;
};

/// Greedy, value-preserving sign count. Throws std::out_of_range unless
/// 1 <= n < 60^4.
SignTally sign_decomposition(std::uint32_t n, SignStyle style);

/// Transliteration such as "wedge: 2×ŠÁR 4×GÉŠ-U 1×GÉŠ". Throws
/// std::domain_error on an empty tally (zero has no signs).
std::string format_signs(const SignTally& tally);

}  // namespace sexag
