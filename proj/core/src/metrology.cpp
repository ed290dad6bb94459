#include "sexag/metrology.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "sexag/errors.hpp"
#include "sexag/numerals.hpp"
#include "sexag/regular.hpp"

namespace sexag {
namespace {

const std::vector<UnitSystem>& all_systems() {
    static const std::vector<UnitSystem> systems = [] {
        std::vector<UnitSystem> s;
        s.push_back({UnitSystemId::length,
                     "length",
                     {
                         {"ninda", 1, {"ninda-du"}, "the rod, roughly 6 m"},
                         {"éš", 10, {"es", "esh", "esz"}, "the rope, 10 ninda"},
                     }});
        s.push_back({UnitSystemId::area,
                     "area",
                     {
                         {"sar", 1, {}, "one square ninda"},
                         {"iku", 100, {}, ""},
                         {"bùr", 1800, {"bur", "bur3"}, ""},
                         {"šár", 108000, {"shar", "szar", "sar2", "shar2", "szar2", "šar"},
                          "60 bùr"},
                         {"šár-gal", 6480000,
                          {"shar-gal", "szar-gal", "sar2-gal", "shar2-gal", "šar-gal"},
                          "3600 bùr, never used in everyday life"},
                     }});
        const Unit sila{"sìla", 1, {"sila"}, "roughly 1 liter"};
        const Unit ban{"bán", 10, {"ban", "ban2"}, ""};
        const Unit nigida{"nigida", 60, {}, ""};
        s.push_back({UnitSystemId::capacity_gur,
                     "capacity-gur",
                     {sila, ban, nigida, {"gur", 300, {}, "5 nigida"}}});
        s.push_back({UnitSystemId::capacity_lidga,
                     "capacity-lidga",
                     {sila, ban, nigida, {"líd-ga", 240, {"lid-ga", "lidga"}, "4 nigida"}}});
        s.push_back({UnitSystemId::capacity_granary,
                     "capacity-granary",
                     {sila, ban, nigida,
                      {"gur₇", 1152000, {"gur7", "guru7"}, "the great granary unit"}}});
        return s;
    }();
    return systems;
}

std::string ascii_lower(std::string_view text) {
    std::string out(text);
    for (char& c : out) {
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    return out;
}

// Cuneiform signs needed to write a count; feeds the additive-vs-
// subtractive comparison. Values outside the sign grammar never win it.
std::size_t sign_count(const SexValue& count) {
    constexpr std::size_t kNever = std::numeric_limits<std::size_t>::max() / 4;
    if (!count.is_integer() || !count.is_positive()) return kNever;
    std::uint64_t n;
    try {
        n = to_uint64(count);
    } catch (const std::overflow_error&) {
        return kNever;
    }
    if (n >= kWordLimit) return kNever;
    std::size_t total = 0;
    for (const auto& [value, cnt] : sign_decomposition(static_cast<std::uint32_t>(n),
                                                       SignStyle::wedge)
                                        .counts) {
        total += cnt;
    }
    return total;
}

std::size_t spelling_cost(const MixedQuantity& q) {
    std::size_t total = 0;
    for (const auto& [unit, count] : q.parts) {
        total += sign_count(count) + 1;
    }
    if (q.subtractive) {
        total += 1 + sign_count(q.subtractive->second) + 1;
    }
    return total;
}

SexValue factor_value(const Unit& u) {
    return SexValue::from_int(u.base_factor);
}

const Unit& unit_or_throw(const UnitSystem& sys, std::string_view name) {
    if (const Unit* u = sys.find_unit(name)) return *u;
    std::ostringstream msg;
    msg << "unknown unit \"" << name << "\" in system " << sys.name;
    throw std::invalid_argument(msg.str());
}

void push_step(std::vector<TraceStep>& trace, std::string label, std::string text) {
    trace.push_back({std::move(label), std::move(text)});
}

}  // namespace

const Unit* UnitSystem::find_unit(std::string_view name) const {
    const std::string wanted = ascii_lower(name);
    for (const Unit& u : ladder) {
        if (wanted == u.name) return &u;
        for (std::string_view alias : u.aliases) {
            if (wanted == alias) return &u;
        }
    }
    return nullptr;
}

const UnitSystem& unit_system(UnitSystemId id) {
    return all_systems()[static_cast<std::size_t>(id)];
}

const UnitSystem* find_unit_system(std::string_view name) {
    const std::string wanted = ascii_lower(name);
    for (const UnitSystem& sys : all_systems()) {
        if (wanted == sys.name) return &sys;
    }
    if (wanted == "gur") return &unit_system(UnitSystemId::capacity_gur);
    if (wanted == "lidga" || wanted == "lid-ga" || wanted == "líd-ga") {
        return &unit_system(UnitSystemId::capacity_lidga);
    }
    if (wanted == "granary" || wanted == "gur7" || wanted == "gur₇") {
        return &unit_system(UnitSystemId::capacity_granary);
    }
    return nullptr;
}

SexValue convert_exact(const SexValue& amount, const UnitSystem& system,
                       std::string_view from_unit, std::string_view to_unit) {
    const Unit& from = unit_or_throw(system, from_unit);
    const Unit& to = unit_or_throw(system, to_unit);
    if (amount.is_zero()) return {};
    // Both factors are 60-smooth, so the reciprocal is finite and the
    // conversion exact.
    return amount * factor_value(from) * reciprocal_value(factor_value(to));
}

SexValue convert_exact(const SexValue& amount, std::string_view from_unit,
                       std::string_view to_unit) {
    for (const UnitSystem& sys : all_systems()) {
        if (sys.find_unit(from_unit) && sys.find_unit(to_unit)) {
            return convert_exact(amount, sys, from_unit, to_unit);
        }
    }
    std::ostringstream msg;
    msg << "no unit system carries both \"" << from_unit << "\" and \"" << to_unit
        << "\"";
    throw std::invalid_argument(msg.str());
}

SexValue MixedQuantity::value_in_base() const {
    const UnitSystem& sys = unit_system(system);
    SexValue total = remainder_base;
    for (const auto& [unit, count] : parts) {
        total = total + count * factor_value(unit_or_throw(sys, unit));
    }
    if (subtractive) {
        total = total - subtractive->second * factor_value(unit_or_throw(sys, subtractive->first));
    }
    return total;
}

std::string MixedQuantity::str() const {
    if (is_zero() && !subtractive) return "0";
    const Unit& base = unit_system(system).base();
    auto display = parts;
    if (!remainder_base.is_zero()) {
        // A base-unit fraction joins the trailing base-unit count, so 1 sìla
        // plus 0;30 sìla prints as "1;30 sìla".
        if (!display.empty() && display.back().first == base.name) {
            display.back().second = display.back().second + remainder_base;
        } else {
            display.emplace_back(std::string(base.name), remainder_base);
        }
    }
    std::ostringstream out;
    bool first = true;
    for (const auto& [unit, count] : display) {
        if (!first) out << ' ';
        first = false;
        out << count.str() << ' ' << unit;
    }
    if (subtractive) {
        out << " - " << subtractive->second.str() << ' ' << subtractive->first;
    }
    return out.str();
}

MixedQuantity parse_quantity(std::string_view text, UnitSystemId system) {
    const UnitSystem& sys = unit_system(system);
    MixedQuantity out;
    out.system = system;

    // Whitespace-separated tokens: alternating count and unit name, with a
    // single standalone minus starting the deficit term.
    std::vector<std::pair<std::string, std::size_t>> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        tokens.emplace_back(std::string(text.substr(start, i - start)), start);
    }
    if (tokens.empty()) throw parse_error("empty quantity", 0, 1);
    if (tokens.size() == 1 && tokens[0].first == "0") return out;

    bool in_deficit = false;
    bool deficit_done = false;
    std::int64_t prev_factor = std::numeric_limits<std::int64_t>::max();
    for (std::size_t t = 0; t < tokens.size();) {
        const auto& [tok, off] = tokens[t];
        if (tok == "-" || tok == "−") {
            if (in_deficit || deficit_done || out.parts.empty()) {
                throw parse_error("misplaced deficit sign", 0, static_cast<int>(off) + 1);
            }
            in_deficit = true;
            ++t;
            continue;
        }
        if (t + 1 >= tokens.size()) {
            throw parse_error("count without a unit", 0, static_cast<int>(off) + 1);
        }
        SexValue count;
        try {
            count = SexValue::parse(tok);
        } catch (const parse_error& e) {
            std::ostringstream msg;
            msg << "bad count \"" << tok << "\": " << e.what();
            throw parse_error(msg.str(), 0, static_cast<int>(off) + 1);
        }
        const auto& [unit_tok, unit_off] = tokens[t + 1];
        const Unit* unit = sys.find_unit(unit_tok);
        if (!unit) {
            std::ostringstream msg;
            msg << "unknown unit \"" << unit_tok << "\" in system " << sys.name;
            throw parse_error(msg.str(), 0, static_cast<int>(unit_off) + 1);
        }
        if (count.is_negative()) {
            throw parse_error("counts must be nonnegative", 0, static_cast<int>(off) + 1);
        }
        if (in_deficit) {
            if (!count.is_integer() || count.is_zero()) {
                throw parse_error("the deficit must be a whole positive count", 0,
                                  static_cast<int>(off) + 1);
            }
            out.subtractive = {std::string(unit->name), count};
            in_deficit = false;
            deficit_done = true;
        } else {
            if (deficit_done) {
                throw parse_error("parts may not follow the deficit term", 0,
                                  static_cast<int>(off) + 1);
            }
            if (unit->base_factor >= prev_factor) {
                throw parse_error("units must strictly descend", 0,
                                  static_cast<int>(unit_off) + 1);
            }
            prev_factor = unit->base_factor;
            if (!count.is_integer()) {
                if (unit->base_factor != 1) {
                    throw parse_error("only the base unit may carry a fraction", 0,
                                      static_cast<int>(off) + 1);
                }
                out.remainder_base = count.fraction();
                count = count.truncated();
            }
            if (!count.is_zero()) {
                out.parts.emplace_back(std::string(unit->name), count);
            }
        }
        t += 2;
    }
    if (in_deficit) throw parse_error("dangling deficit sign", 0, static_cast<int>(text.size()));
    if (out.value_in_base().is_negative()) {
        throw parse_error("the deficit exceeds the additive parts", 0, 1);
    }
    return out;
}

MixedQuantity decompose_mixed(const SexValue& q, UnitSystemId system, QuantityForm form) {
    if (q.is_negative()) throw std::domain_error("quantities are nonnegative");
    const UnitSystem& sys = unit_system(system);

    MixedQuantity additive;
    additive.system = system;
    additive.remainder_base = q.fraction();
    SexValue rem = q.truncated();
    for (auto it = sys.ladder.rbegin(); it != sys.ladder.rend(); ++it) {
        if (rem.is_zero()) break;
        auto [count, next] = divmod(rem, factor_value(*it));
        if (!count.is_zero()) {
            additive.parts.emplace_back(std::string(it->name), count);
        }
        rem = next;
    }

    if (form == QuantityForm::additive || q.truncated().is_zero() ||
        !q.fraction().is_zero()) {
        return additive;
    }

    // Subtractive alternative: a rounded-up count of one unit less a
    // single-term deficit, kept only when it strictly saves signs and the
    // deficit stays under half the rounded figure.
    const SexValue whole = q.truncated();
    std::optional<MixedQuantity> best;
    std::size_t best_cost = spelling_cost(additive);
    for (std::size_t bi = sys.ladder.size(); bi-- > 1;) {
        const Unit& big = sys.ladder[bi];
        const SexValue big_factor = factor_value(big);
        auto [top, r] = divmod(whole, big_factor);
        if (r.is_zero()) continue;
        const SexValue rounded = (top + SexValue::from_int(1)) * big_factor;
        const SexValue deficit = rounded - whole;
        if (deficit + deficit >= rounded) continue;
        for (std::size_t di = bi; di-- > 0;) {
            const Unit& small = sys.ladder[di];
            auto [dcount, drem] = divmod(deficit, factor_value(small));
            if (!drem.is_zero()) continue;
            MixedQuantity candidate;
            candidate.system = system;
            candidate.remainder_base = q.fraction();
            candidate.parts.emplace_back(std::string(big.name),
                                         top + SexValue::from_int(1));
            candidate.subtractive = {std::string(small.name), dcount};
            if (const auto cost = spelling_cost(candidate); cost < best_cost) {
                best_cost = cost;
                best = std::move(candidate);
            }
            break;  // the largest dividing unit gives the fewest signs
        }
    }
    return best ? *best : additive;
}

std::string format_trace(const std::vector<TraceStep>& steps) {
    std::ostringstream out;
    for (const auto& step : steps) {
        out << step.label << ": " << step.text << '\n';
    }
    return out.str();
}

SquareAreaResult square_area_scribal(const SexValue& side,
                                     const SquareAreaOptions& options) {
    if (!side.is_positive()) throw std::domain_error("the side must be positive");
    SquareAreaResult result;
    auto& trace = result.trace;
    push_step(trace, "side", side.str() + " ninda");

    const SexValue sar = side * side;
    const SexValue esh = side * reciprocal(10);
    const bool whole_esh = esh.is_integer();
    if (whole_esh) {
        push_step(trace, "side in éš", esh.str() + " éš");
    }
    push_step(trace, "sar", sar.str() + " sar");

    SexValue iku;
    if (whole_esh) {
        iku = esh * esh;
    } else {
        push_step(trace, "recip 1,40", reciprocal(100).str());
        iku = sar * reciprocal(100);
    }
    push_step(trace, "iku", iku.str() + " iku");

    if (options.divide_directly) {
        if (!iku.is_integer()) {
            throw std::domain_error("direct division by 18 needs a whole iku count");
        }
        auto [q, r] = divmod(iku, SexValue::from_int(18));
        push_step(trace, "bùr (direct)", q.str() + " bùr");
        if (!r.is_zero()) {
            push_step(trace, "iku remainder", r.str() + " iku");
        }
    } else {
        push_step(trace, "recip 18", reciprocal(18).str());
        const SexValue bur = iku * reciprocal(18);
        push_step(trace, "bùr", bur.str() + " bùr");
    }

    result.area = decompose_mixed(sar, UnitSystemId::area, QuantityForm::additive);
    push_step(trace, "area", result.area.str());
    return result;
}

ErrorModel parse_error_model(std::string_view text) {
    if (text == "recip18=0;3,30") return ErrorModel::recip18_as_3_30;
    if (text == "via-15-square") return ErrorModel::via_15_square;
    std::ostringstream msg;
    msg << "unknown error model \"" << text
        << "\" (known: recip18=0;3,30, via-15-square)";
    throw std::invalid_argument(msg.str());
}

std::string_view error_model_name(ErrorModel model) {
    switch (model) {
        case ErrorModel::recip18_as_3_30: return "recip18=0;3,30";
        case ErrorModel::via_15_square: return "via-15-square";
    }
    throw std::invalid_argument("unknown error model");
}

SquareAreaResult square_area_error_replay(const SexValue& side,
                                          const std::vector<ErrorModel>& models) {
    if (!side.is_positive()) throw std::domain_error("the side must be positive");
    bool wrong_recip = false;
    bool via_15 = false;
    for (const ErrorModel m : models) {
        if (m == ErrorModel::recip18_as_3_30) wrong_recip = true;
        if (m == ErrorModel::via_15_square) via_15 = true;
    }
    const SexValue recip18 = wrong_recip ? SexValue::parse("0;3,30") : reciprocal(18);

    SquareAreaResult result;
    auto& trace = result.trace;
    SexValue bur;
    if (via_15) {
        push_step(trace, "side", side.str() + " ninda");
        const SexValue q15 = side * reciprocal(15);
        push_step(trace, "side ÷ 15", q15.str());
        const SexValue sq = q15 * q15;
        push_step(trace, "square of quotient", sq.str());
        push_step(trace, "recip 18", recip18.str());
        // Each 15-ninda square is 2¼ iku, applied as a doubling plus a
        // quartering after the (mis)remembered reciprocal.
        const SexValue scaled = sq * recip18;
        push_step(trace, "scaled", scaled.str());
        const SexValue doubled = scaled + scaled;
        push_step(trace, "doubled", doubled.str());
        const SexValue quartered = scaled * SexValue::parse("0;15");
        push_step(trace, "quartered", quartered.str());
        bur = doubled + quartered;
        push_step(trace, "bùr", bur.str() + " bùr");
    } else {
        push_step(trace, "side", side.str() + " ninda");
        const SexValue sar = side * side;
        const SexValue esh = side * reciprocal(10);
        const bool whole_esh = esh.is_integer();
        if (whole_esh) {
            push_step(trace, "side in éš", esh.str() + " éš");
        }
        push_step(trace, "sar", sar.str() + " sar");
        SexValue iku;
        if (whole_esh) {
            iku = esh * esh;
        } else {
            push_step(trace, "recip 1,40", reciprocal(100).str());
            iku = sar * reciprocal(100);
        }
        push_step(trace, "iku", iku.str() + " iku");
        push_step(trace, "recip 18", recip18.str());
        bur = iku * recip18;
        push_step(trace, "bùr", bur.str() + " bùr");
    }

    result.area = decompose_mixed(bur * SexValue::from_int(1800), UnitSystemId::area,
                                  QuantityForm::additive);
    push_step(trace, "area", result.area.str());
    return result;
}

}  // namespace sexag
