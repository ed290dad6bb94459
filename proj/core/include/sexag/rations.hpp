#pragma once

#include <string_view>

#include "sexag/metrology.hpp"
#include "sexag/sexvalue.hpp"

namespace sexag {

/// Outcome of dividing a barley stock among men at a fixed ration.
struct RationResult {
    MixedQuantity total;     // the stock that was divided
    SexValue heads;          // whole men served
    MixedQuantity per_head;  // the ration, in the stock's system
    SexValue remainder;      // sìla left over, "repaid" to the granary

    /// heads × per_head + remainder, in base sìla; equals the stock.
    SexValue value_in_base() const;
};

/// Total issue for `heads` recipients at `per_head` each, decomposed in the
/// per-head quantity's own system. heads must be a whole count >= 1.
MixedQuantity capacity_total(const SexValue& heads, const MixedQuantity& per_head,
                             QuantityForm form = QuantityForm::additive);

/// The unit a donkey account is balanced in: 1 gur = 5 nigida,
/// 1 líd-ga = 4 nigida.
enum class BigUnit { gur, lid_ga };

/// Accepts "gur", "líd-ga", "lid-ga", "lidga"; throws std::invalid_argument
/// otherwise.
BigUnit parse_big_unit(std::string_view text);

std::string_view big_unit_name(BigUnit unit);

/// Barley for `heads` donkeys at `per_head_nigida` nigida each (the attested
/// allocation is 1), spelled in the chosen big unit. Dividing the count by 5
/// or 4 and keeping the residue in nigida is exactly this decomposition.
/// heads and per_head_nigida must be whole counts >= 1.
MixedQuantity donkey_ration(const SexValue& heads, BigUnit big_unit,
                            QuantityForm form = QuantityForm::additive,
                            const SexValue& per_head_nigida = SexValue::from_int(1));

/// Splits `stock` among men at `per_head` sìla each; the residue is repaid.
/// Requires stock >= per_head > 0 with both a whole number of sìla.
RationResult granary_division(const MixedQuantity& stock, const SexValue& per_head);

}  // namespace sexag
