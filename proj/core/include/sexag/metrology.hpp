#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sexag/sexvalue.hpp"

namespace sexag {

enum class UnitSystemId {
    length,
    area,
    capacity_gur,
    capacity_lidga,
    capacity_granary,
};

struct Unit {
    std::string_view name;                     // canonical, with diacritics
    std::int64_t base_factor;                  // exact multiple of the base unit
    std::vector<std::string_view> aliases;     // accepted ASCII spellings
    std::string_view note;                     // documentation only
};

/// A unit ladder over one base unit. Every factor is 60-smooth, so every
/// in-system conversion is exact.
struct UnitSystem {
    UnitSystemId id;
    std::string_view name;     // e.g. "capacity-lidga"
    std::vector<Unit> ladder;  // ascending, base unit (factor 1) first

    const Unit& base() const { return ladder.front(); }

    /// Case-insensitive lookup by canonical name or alias; null if absent.
    const Unit* find_unit(std::string_view name) const;
};

const UnitSystem& unit_system(UnitSystemId id);

/// Lookup by system name ("area", "capacity-gur", ...; short capacity
/// aliases "gur", "lidga", "granary" accepted). Null if unknown.
const UnitSystem* find_unit_system(std::string_view name);

/// Exact conversion between two units of one system. The target unit's
/// factor is 60-smooth, so the result is always finite. Throws
/// std::invalid_argument when a unit is unknown or the pair spans systems.
SexValue convert_exact(const SexValue& amount, const UnitSystem& system,
                       std::string_view from_unit, std::string_view to_unit);

/// As above, resolving the system as the first one that carries both units.
SexValue convert_exact(const SexValue& amount, std::string_view from_unit,
                       std::string_view to_unit);

enum class QuantityForm {
    additive,
    subtractive_if_shorter,
};

/// A quantity spelled in mixed units, e.g. "3 líd-ga 1 nigida 2 bán" or the
/// subtractive "20 líd-ga - 3 nigida". Counts are nonnegative integers in
/// descending unit order; an optional deficit term is subtracted from them;
/// remainder_base holds any fraction below the base unit. The total value
/// is never negative.
struct MixedQuantity {
    UnitSystemId system = UnitSystemId::length;
    std::vector<std::pair<std::string, SexValue>> parts;
    std::optional<std::pair<std::string, SexValue>> subtractive;
    SexValue remainder_base;

    SexValue value_in_base() const;
    bool is_zero() const { return parts.empty() && remainder_base.is_zero(); }

    /// "3 líd-ga 1 nigida 2 bán"; "0" when empty. The deficit spells as
    /// " - <count> <unit>".
    std::string str() const;
};

/// Parses quantity text like "1 šár-gal 23 šár 20 bùr" or
/// "20 líd-ga - 3 nigida" (either "-" or "−"). Units must belong to
/// `system` and descend strictly; counts must be whole except that the
/// base unit may carry a fraction (stored in remainder_base). Throws
/// parse_error.
MixedQuantity parse_quantity(std::string_view text, UnitSystemId system);

/// Greedy mixed-unit spelling of q base units (q >= 0, else
/// std::domain_error). The subtractive form replaces the additive one by
/// "X big - deficit" when the deficit is small (under half the rounded-up
/// figure) and the spelling strictly saves cuneiform signs; ties keep the
/// additive form, matching the attested tablets.
MixedQuantity decompose_mixed(const SexValue& q, UnitSystemId system,
                              QuantityForm form = QuantityForm::additive);

/// One explained computation step; renders as "label: text".
struct TraceStep {
    std::string label;
    std::string text;
};

std::string format_trace(const std::vector<TraceStep>& steps);

struct SquareAreaOptions {
    /// Realize the iku -> bùr step as divmod by 18 instead of the scribal
    /// multiplication by 0;3,20 (comparison aid; requires whole iku).
    bool divide_directly = false;
};

struct SquareAreaResult {
    MixedQuantity area;  // area system, greedy decomposition
    std::vector<TraceStep> trace;
};

/// The Fara-period square-area procedure for a plot of `side` ninda
/// (side > 0, else std::domain_error): square to sar; convert to iku as
/// (side/10)² when side is a whole number of éš, otherwise by the
/// reciprocal of 1,40; convert to bùr by the reciprocal of 18; decompose.
/// The trace records every intermediate in base 60.
SquareAreaResult square_area_scribal(const SexValue& side,
                                     const SquareAreaOptions& options = {});

/// Documented scribal slips that can be replayed.
enum class ErrorModel {
    /// The reciprocal of 18 recalled as 0;3,30 instead of 0;3,20.
    recip18_as_3_30,
    /// Area reached through 2¼ × (side/15)², the alternate unit square.
    via_15_square,
};

/// Parses "recip18=0;3,30" or "via-15-square"; throws std::invalid_argument
/// on anything else.
ErrorModel parse_error_model(std::string_view text);

std::string_view error_model_name(ErrorModel model);

/// Replays the square-area computation under the given slips (empty list =
/// faithful route). With via_15_square the chain follows the alternate
/// tablet: count = (side/15)², scale by the reciprocal of 18 (wrong one if
/// modeled), then double and quarter to apply the 2¼. Exact throughout.
SquareAreaResult square_area_error_replay(const SexValue& side,
                                          const std::vector<ErrorModel>& models);

}  // namespace sexag
