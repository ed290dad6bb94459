#include "sexag/rations.hpp"

#include <sstream>
#include <stdexcept>

namespace sexag {
namespace {

void require_whole_count(const SexValue& n, const char* what) {
    if (!n.is_integer() || !n.is_positive()) {
        std::ostringstream msg;
        msg << what << " must be a whole count of at least 1, got " << n.str();
        throw std::domain_error(msg.str());
    }
}

}  // namespace

SexValue RationResult::value_in_base() const {
    return heads * per_head.value_in_base() + remainder;
}

MixedQuantity capacity_total(const SexValue& heads, const MixedQuantity& per_head,
                             QuantityForm form) {
    require_whole_count(heads, "heads");
    return decompose_mixed(heads * per_head.value_in_base(), per_head.system, form);
}

BigUnit parse_big_unit(std::string_view text) {
    if (text == "gur") return BigUnit::gur;
    if (text == "líd-ga" || text == "lid-ga" || text == "lidga") return BigUnit::lid_ga;
    std::ostringstream msg;
    msg << "unknown big unit \"" << text << "\" (known: gur, líd-ga)";
    throw std::invalid_argument(msg.str());
}

std::string_view big_unit_name(BigUnit unit) {
    return unit == BigUnit::gur ? "gur" : "líd-ga";
}

MixedQuantity donkey_ration(const SexValue& heads, BigUnit big_unit, QuantityForm form,
                            const SexValue& per_head_nigida) {
    require_whole_count(heads, "heads");
    require_whole_count(per_head_nigida, "the per-head nigida allocation");
    const UnitSystemId system = big_unit == BigUnit::gur ? UnitSystemId::capacity_gur
                                                         : UnitSystemId::capacity_lidga;
    const SexValue sila =
        heads * per_head_nigida * SexValue::from_int(60);  // 1 nigida = 60 sìla
    return decompose_mixed(sila, system, form);
}

RationResult granary_division(const MixedQuantity& stock, const SexValue& per_head) {
    if (!per_head.is_integer() || !per_head.is_positive()) {
        std::ostringstream msg;
        msg << "the ration must be a whole positive count of sìla, got "
            << per_head.str();
        throw std::domain_error(msg.str());
    }
    const SexValue total = stock.value_in_base();
    if (!total.is_integer()) {
        throw std::domain_error("the stock must be a whole number of sìla");
    }
    if (total < per_head) {
        std::ostringstream msg;
        msg << "the stock (" << total.str() << " sìla) is below one ration ("
            << per_head.str() << " sìla)";
        throw std::domain_error(msg.str());
    }
    auto [heads, remainder] = divmod(total, per_head);
    RationResult result;
    result.total = stock;
    result.heads = heads;
    result.per_head = decompose_mixed(per_head, stock.system);
    result.remainder = remainder;
    return result;
}

}  // namespace sexag
