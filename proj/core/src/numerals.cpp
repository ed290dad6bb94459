#include "sexag/numerals.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "sexag/errors.hpp"

namespace sexag {
namespace {

struct WordInfo {
    Word word;
    std::string_view text;
    std::uint32_t value;
};

constexpr std::array<WordInfo, 20> kWords{{
    {Word::ash, "aš", 1},
    {Word::dish, "diš", 1},
    {Word::min, "min", 2},
    {Word::esh, "eš₅", 3},
    {Word::limmu, "limmu", 4},
    {Word::ia, "iá", 5},
    {Word::ash3, "àš", 6},
    {Word::imin, "imin", 7},
    {Word::ussu, "ussu", 8},
    {Word::ilimmu, "ilimmu", 9},
    {Word::u, "u", 10},
    {Word::nish, "niš", 20},
    {Word::ushu, "ùšu", 30},
    {Word::nimin, "nimin", 40},
    {Word::ninnu, "ninnu", 50},
    {Word::gesh, "géš", 60},
    {Word::geshta_u, "gešta-u", 70},
    {Word::gesh_u, "géš-u", 600},
    {Word::shar, "šár", 3600},
    {Word::shar_gal, "šár-gal", 216000},
}};

const WordInfo& info(Word w) {
    return kWords[static_cast<std::size_t>(w)];
}

Word units_word(unsigned d) {
    constexpr std::array<Word, 10> map{Word::ash,   Word::ash,  Word::min,
                                       Word::esh,   Word::limmu, Word::ia,
                                       Word::ash3,  Word::imin,  Word::ussu,
                                       Word::ilimmu};
    return map[d];
}

Word tens_word(unsigned t) {
    constexpr std::array<Word, 6> map{Word::ash, Word::u, Word::nish, Word::ushu,
                                      Word::nimin, Word::ninnu};
    return map[t / 10];
}

bool is_units(Word w) {
    return word_value(w) >= 1 && word_value(w) <= 9;
}

bool is_tens(Word w) {
    const auto v = word_value(w);
    return v >= 10 && v <= 50;
}

bool is_sixty_ladder(Word w) {
    return w == Word::gesh || w == Word::gesh_u || w == Word::shar ||
           w == Word::shar_gal;
}

unsigned multiplier_cap(Word w) {
    // A géš multiplier of 10 or more would spell the géš-u compound, so it
    // stays below 10; the rest are bounded by the value range alone.
    if (w == Word::gesh) return 9;
    if (is_sixty_ladder(w)) return 59;
    return 1;
}

// Multiplier spelling for 2..59, e.g. 4 -> "limmu", 23 -> "niš-eš₅".
std::string multiplier_text(unsigned m) {
    std::string out;
    if (m >= 10) out = std::string(info(tens_word(m / 10 * 10)).text);
    if (m % 10) {
        if (!out.empty()) out += '-';
        out += info(units_word(m % 10)).text;
    }
    return out;
}

// Diacritic folding toward plain ASCII: šár -> sar, eš₅ -> es5, shar -> sar.
std::string fold(std::string_view in) {
    static constexpr std::pair<std::string_view, char> kSeqs[] = {
        {"š", 's'}, {"Š", 's'}, {"á", 'a'}, {"à", 'a'}, {"â", 'a'},
        {"Á", 'a'}, {"À", 'a'}, {"é", 'e'}, {"è", 'e'}, {"É", 'e'},
        {"ù", 'u'}, {"ú", 'u'}, {"Ù", 'u'}, {"Ú", 'u'},
    };
    std::string out;
    std::size_t i = 0;
    while (i < in.size()) {
        const auto c = static_cast<unsigned char>(in[i]);
        if (c < 0x80) {
            out += static_cast<char>(std::tolower(c));
            ++i;
            continue;
        }
        // Subscript digits U+2080..U+2089.
        if (c == 0xE2 && i + 2 < in.size() &&
            static_cast<unsigned char>(in[i + 1]) == 0x82) {
            const auto d = static_cast<unsigned char>(in[i + 2]);
            if (d >= 0x80 && d <= 0x89) {
                out += static_cast<char>('0' + (d - 0x80));
                i += 3;
                continue;
            }
        }
        bool matched = false;
        for (const auto& [seq, repl] : kSeqs) {
            if (in.substr(i, seq.size()) == seq) {
                out += repl;
                i += seq.size();
                matched = true;
                break;
            }
        }
        if (!matched) {
            out += in[i];
            ++i;
        }
    }
    // sz and sh both transliterate š.
    std::string flat;
    for (std::size_t j = 0; j < out.size(); ++j) {
        if (out[j] == 's' && j + 1 < out.size() && (out[j + 1] == 'z' || out[j + 1] == 'h')) {
            flat += 's';
            ++j;
        } else {
            flat += out[j];
        }
    }
    return flat;
}

// Token codes: a Word, or one of the bound morphemes that only occur
// inside compounds.
constexpr int kGal = -1;
constexpr int kGeshta = -2;

const std::map<std::string, int, std::less<>>& exact_map() {
    static const std::map<std::string, int, std::less<>> m = [] {
        std::map<std::string, int, std::less<>> t;
        for (const auto& w : kWords) {
            if (w.word == Word::gesh_u || w.word == Word::shar_gal ||
                w.word == Word::geshta_u) {
                continue;  // compounds arrive as separate tokens
            }
            t.emplace(std::string(w.text), static_cast<int>(w.word));
        }
        t.emplace("gal", kGal);
        t.emplace("gešta", kGeshta);
        return t;
    }();
    return m;
}

const std::map<std::string, int, std::less<>>& folded_map() {
    static const std::map<std::string, int, std::less<>> m = [] {
        std::map<std::string, int, std::less<>> t;
        auto put = [&](std::string_view key, Word w) {
            t.emplace(std::string(key), static_cast<int>(w));
        };
        // Indexed transliterations first, then bare ones. The bare "as"
        // reads as aš = 1; the 6 needs its index (as3).
        put("as", Word::ash);
        put("dis", Word::dish);
        put("min", Word::min);
        put("es5", Word::esh);
        put("es", Word::esh);
        put("limmu", Word::limmu);
        put("ia2", Word::ia);
        put("ia", Word::ia);
        put("as3", Word::ash3);
        put("imin", Word::imin);
        put("ussu", Word::ussu);
        put("ilimmu", Word::ilimmu);
        put("u", Word::u);
        put("nis", Word::nish);
        put("usu3", Word::ushu);
        put("usu", Word::ushu);
        put("nimin", Word::nimin);
        put("ninnu", Word::ninnu);
        put("ges2", Word::gesh);
        put("ges", Word::gesh);
        put("sar2", Word::shar);
        put("sar", Word::shar);
        t.emplace("gal", kGal);
        t.emplace("gesta", kGeshta);
        return t;
    }();
    return m;
}

std::optional<int> lookup(std::string_view token) {
    const auto& exact = exact_map();
    if (auto it = exact.find(token); it != exact.end()) return it->second;
    const auto& folded = folded_map();
    std::string f = fold(token);
    if (auto it = folded.find(f); it != folded.end()) return it->second;
    while (!f.empty() && std::isdigit(static_cast<unsigned char>(f.back()))) {
        f.pop_back();
    }
    if (auto it = folded.find(f); it != folded.end()) return it->second;
    return std::nullopt;
}

struct Token {
    std::string text;
    std::size_t offset = 0;      // byte offset in the input
    bool hyphen_before = false;  // bound to the previous token
};

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    bool pending_hyphen = false;
    bool at_start = true;
    while (i < text.size()) {
        const char c = text[i];
        if (c == ' ' || c == '\t' || c == '-') {
            if (c == '-') {
                if (at_start || pending_hyphen) {
                    throw parse_error("stray hyphen in numeral phrase", 0,
                                      static_cast<int>(i) + 1);
                }
                pending_hyphen = true;
            }
            ++i;
            continue;
        }
        Token tok;
        tok.offset = i;
        tok.hyphen_before = pending_hyphen;
        while (i < text.size() && text[i] != ' ' && text[i] != '\t' && text[i] != '-') {
            tok.text += text[i];
            ++i;
        }
        tokens.push_back(std::move(tok));
        pending_hyphen = false;
        at_start = false;
    }
    if (pending_hyphen) {
        throw parse_error("numeral phrase ends with a hyphen", 0,
                          static_cast<int>(text.size()));
    }
    return tokens;
}

[[noreturn]] void bad_token(const Token& tok, const std::string& why) {
    std::ostringstream msg;
    msg << why << ": \"" << tok.text << "\"";
    throw parse_error(msg.str(), 0, static_cast<int>(tok.offset) + 1);
}

}  // namespace

std::string_view word_text(Word w) {
    return info(w).text;
}

std::uint32_t word_value(Word w) noexcept {
    return info(w).value;
}

NumeralPhrase NumeralPhrase::from_items(std::vector<NumeralItem> items) {
    if (items.empty()) throw std::invalid_argument("empty numeral phrase");
    std::uint64_t total = 0;
    std::uint32_t prev_level = 0;
    bool first = true;
    for (const auto& item : items) {
        const auto level = word_value(item.unit);
        if (!first && level >= prev_level) {
            throw std::invalid_argument("numeral words must strictly descend");
        }
        if (item.multiplier < 1 || item.multiplier > multiplier_cap(item.unit)) {
            std::ostringstream msg;
            msg << "multiplier " << item.multiplier << " out of range for "
                << word_text(item.unit);
            throw std::invalid_argument(msg.str());
        }
        total += std::uint64_t{level} * item.multiplier;
        prev_level = level;
        first = false;
    }
    if (total >= kWordLimit) {
        throw std::invalid_argument("numeral phrase value reaches 60^4");
    }
    NumeralPhrase p;
    p.items_ = std::move(items);
    return p;
}

NumeralPhrase NumeralPhrase::parse(std::string_view text) {
    const auto tokens = tokenize(text);
    if (tokens.empty()) throw parse_error("empty numeral phrase", 0, 1);

    std::vector<NumeralItem> items;
    std::size_t i = 0;
    while (i < tokens.size()) {
        // One hyphen-bound group.
        std::size_t end = i + 1;
        while (end < tokens.size() && tokens[end].hyphen_before) ++end;

        std::vector<int> codes;
        for (std::size_t k = i; k < end; ++k) {
            const auto code = lookup(tokens[k].text);
            if (!code) bad_token(tokens[k], "unknown numeral word");
            codes.push_back(*code);
        }

        std::size_t r = 0;  // cursor within the group
        Word unit;
        if (codes[0] == kGeshta) {
            if (codes.size() != 2 || codes[1] != static_cast<int>(Word::u)) {
                bad_token(tokens[i], "gešta occurs only in gešta-u");
            }
            unit = Word::geshta_u;
            r = 2;
        } else if (codes[0] == kGal) {
            bad_token(tokens[i], "gal occurs only in šár-gal");
        } else if (codes[0] == static_cast<int>(Word::shar) && codes.size() >= 2 &&
                   codes[1] == kGal) {
            unit = Word::shar_gal;
            r = 2;
        } else if (codes[0] == static_cast<int>(Word::gesh) && codes.size() >= 2 &&
                   codes[1] == static_cast<int>(Word::u)) {
            unit = Word::gesh_u;
            r = 2;
        } else {
            unit = static_cast<Word>(codes[0]);
            r = 1;
        }

        auto word_at = [&](std::size_t k) -> Word {
            if (codes[k] < 0) bad_token(tokens[i + k], "misplaced bound morpheme");
            return static_cast<Word>(codes[k]);
        };

        if (is_sixty_ladder(unit)) {
            unsigned m = 1;
            if (r < codes.size()) {
                m = 0;
                if (is_tens(word_at(r))) {
                    m += word_value(word_at(r));
                    ++r;
                }
                if (r < codes.size() && is_units(word_at(r))) {
                    m += word_value(word_at(r));
                    ++r;
                }
                if (r != codes.size() || m == 0) {
                    bad_token(tokens[i + r], "not a multiplier word");
                }
            }
            items.push_back({unit, m});
        } else if (is_tens(unit)) {
            items.push_back({unit, 1});
            if (r < codes.size()) {
                if (codes.size() - r != 1 || !is_units(word_at(r))) {
                    bad_token(tokens[i + r], "only a units word may follow a tens word");
                }
                items.push_back({word_at(r), 1});
                ++r;
            }
        } else {
            // Units words and gešta-u take no continuation.
            if (r < codes.size()) {
                bad_token(tokens[i + r], "unexpected word after a complete numeral");
            }
            items.push_back({unit, 1});
        }
        i = end;
    }

    try {
        return from_items(std::move(items));
    } catch (const std::invalid_argument& e) {
        throw parse_error(e.what(), 0, 1);
    }
}

std::uint32_t NumeralPhrase::value() const noexcept {
    std::uint32_t total = 0;
    for (const auto& item : items_) {
        total += word_value(item.unit) * item.multiplier;
    }
    return total;
}

std::string NumeralPhrase::str() const {
    std::string out;
    for (std::size_t i = 0; i < items_.size(); ++i) {
        const auto& item = items_[i];
        if (i > 0) {
            const bool join = is_tens(items_[i - 1].unit) && is_units(item.unit);
            out += join ? '-' : ' ';
        }
        out += word_text(item.unit);
        if (item.multiplier > 1) {
            out += '-';
            out += multiplier_text(item.multiplier);
        }
    }
    return out;
}

NumeralPhrase int_to_words(std::uint32_t n) {
    if (n == 0 || n >= kWordLimit) {
        throw std::out_of_range("numeral words cover 1 .. 60^4 - 1");
    }
    std::vector<NumeralItem> items;
    if (n == 70) {
        items.push_back({Word::geshta_u, 1});
        return NumeralPhrase::from_items(std::move(items));
    }
    for (Word w : {Word::shar_gal, Word::shar, Word::gesh_u, Word::gesh}) {
        const auto v = word_value(w);
        if (const unsigned q = n / v) {
            items.push_back({w, q});
            n %= v;
        }
    }
    if (n >= 10) items.push_back({tens_word(n / 10 * 10), 1});
    if (n % 10) items.push_back({units_word(n % 10), 1});
    return NumeralPhrase::from_items(std::move(items));
}

std::uint32_t words_to_int(const NumeralPhrase& phrase) noexcept {
    return phrase.value();
}

std::uint32_t words_to_int(std::string_view text) {
    return NumeralPhrase::parse(text).value();
}

SignTally sign_decomposition(std::uint32_t n, SignStyle style) {
    if (n == 0 || n >= kWordLimit) {
        throw std::out_of_range("sign tallies cover 1 .. 60^4 - 1");
    }
    SignTally tally;
    tally.style = style;
    for (std::uint32_t v : {216000u, 3600u, 600u, 60u, 10u, 1u}) {
        if (const unsigned q = n / v) {
            tally.counts.emplace(v, q);
            n %= v;
        }
    }
    return tally;
}

std::string format_signs(const SignTally& tally) {
    if (tally.counts.empty()) {
        throw std::domain_error("an empty tally has no sign spelling (zero is unwritable)");
    }
    std::ostringstream out;
    out << (tally.style == SignStyle::wedge ? "wedge: " : "round: ");
    bool first = true;
    for (const auto& [value, count] : tally.counts) {
        if (!first) out << ' ';
        first = false;
        out << count << "×";
        switch (value) {
            case 216000: out << "ŠÁR-GAL"; break;
            case 3600: out << "ŠÁR"; break;
            case 600: out << "GÉŠ-U"; break;
            case 60: out << "GÉŠ"; break;
            case 10: out << "U"; break;
            case 1: out << "DIŠ"; break;
            default: out << value; break;
        }
    }
    return out.str();
}

}  // namespace sexag
