#include "sexag/metrology.hpp"

#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "oracle.hpp"
#include "sexag/errors.hpp"
#include "sexag/sexvalue.hpp"

using sexag::ErrorModel;
using sexag::MixedQuantity;
using sexag::QuantityForm;
using sexag::SexValue;
using sexag::UnitSystemId;

namespace {

SexValue sv(const char* text) { return SexValue::parse(text); }

const UnitSystemId kAllSystems[] = {
    UnitSystemId::length,         UnitSystemId::area,
    UnitSystemId::capacity_gur,   UnitSystemId::capacity_lidga,
    UnitSystemId::capacity_granary,
};

}  // namespace

TEST_CASE("unit ladders expose the attested factors") {
    const auto& area = sexag::unit_system(UnitSystemId::area);
    CHECK(area.base().name == "sar");
    CHECK(area.find_unit("iku")->base_factor == 100);
    CHECK(area.find_unit("bùr")->base_factor == 1800);
    CHECK(area.find_unit("šár")->base_factor == 108000);
    CHECK(area.find_unit("šár-gal")->base_factor == 6480000);

    const auto& length = sexag::unit_system(UnitSystemId::length);
    CHECK(length.find_unit("ninda")->base_factor == 1);
    CHECK(length.find_unit("éš")->base_factor == 10);

    const auto& lidga = sexag::unit_system(UnitSystemId::capacity_lidga);
    CHECK(lidga.find_unit("bán")->base_factor == 10);
    CHECK(lidga.find_unit("nigida")->base_factor == 60);
    CHECK(lidga.find_unit("líd-ga")->base_factor == 240);

    CHECK(sexag::unit_system(UnitSystemId::capacity_gur).find_unit("gur")->base_factor ==
          300);
    CHECK(sexag::unit_system(UnitSystemId::capacity_granary)
              .find_unit("gur₇")
              ->base_factor == 1152000);
}

TEST_CASE("unit lookup accepts ASCII aliases and is case-insensitive") {
    const auto& area = sexag::unit_system(UnitSystemId::area);
    CHECK(area.find_unit("bur")->name == "bùr");
    CHECK(area.find_unit("BUR3")->name == "bùr");
    CHECK(area.find_unit("shar")->name == "šár");
    CHECK(area.find_unit("sar2-gal")->name == "šár-gal");
    CHECK(area.find_unit("sar")->name == "sar");
    CHECK(area.find_unit("ezen") == nullptr);

    const auto& lidga = sexag::unit_system(UnitSystemId::capacity_lidga);
    CHECK(lidga.find_unit("lidga")->name == "líd-ga");
    CHECK(lidga.find_unit("LID-GA")->name == "líd-ga");
    CHECK(sexag::unit_system(UnitSystemId::capacity_granary).find_unit("gur7")->name ==
          "gur₇");

    CHECK(sexag::find_unit_system("area")->id == UnitSystemId::area);
    CHECK(sexag::find_unit_system("gur")->id == UnitSystemId::capacity_gur);
    CHECK(sexag::find_unit_system("lidga")->id == UnitSystemId::capacity_lidga);
    CHECK(sexag::find_unit_system("granary")->id == UnitSystemId::capacity_granary);
    CHECK(sexag::find_unit_system("capacity-granary")->id ==
          UnitSystemId::capacity_granary);
    CHECK(sexag::find_unit_system("weight") == nullptr);
}

TEST_CASE("conversions are exact in both directions") {
    const auto& area = sexag::unit_system(UnitSystemId::area);
    CHECK(sexag::convert_exact(sv("1"), area, "bùr", "iku").str() == "18");
    CHECK(sexag::convert_exact(sv("1"), area, "šár", "bùr").str() == "1,0");
    CHECK(sexag::convert_exact(sv("1"), area, "šár-gal", "bùr").str() == "1,0,0");
    CHECK(sexag::convert_exact(sv("1"), area, "iku", "sar").str() == "1,40");
    CHECK(sexag::convert_exact(sv("1"), area, "sar", "iku").str() == "0;0,36");
    CHECK(sexag::convert_exact(sv("2;15"), area, "iku", "sar").str() == "3,45");

    const auto& lidga = sexag::unit_system(UnitSystemId::capacity_lidga);
    CHECK(sexag::convert_exact(sv("1"), lidga, "líd-ga", "sìla").str() == "4,0");
    CHECK(sexag::convert_exact(sv("1"), lidga, "líd-ga", "nigida").str() == "4");
    CHECK(sexag::convert_exact(sv("1"), lidga, "sìla", "bán").str() == "0;6");

    // The searching overload settles on the first system carrying both units.
    CHECK(sexag::convert_exact(sv("3"), "gur", "nigida").str() == "15");
    CHECK(sexag::convert_exact(sv("1"), "éš", "ninda").str() == "10");
    CHECK(sexag::convert_exact(sv("0"), "gur", "sìla").is_zero());

    CHECK_THROWS_AS(sexag::convert_exact(sv("1"), area, "bùr", "gur"),
                    std::invalid_argument);
    CHECK_THROWS_AS(sexag::convert_exact(sv("1"), "gur", "iku"), std::invalid_argument);
}

TEST_CASE("conversion roundtrip is the identity") {
    oracle::RandomValues rnd(0xa5ea5e01u);
    std::mt19937_64 pick(0xa5ea5e02u);
    for (int i = 0; i < 1000; ++i) {
        const auto& sys = sexag::unit_system(
            kAllSystems[pick() % (sizeof(kAllSystems) / sizeof(kAllSystems[0]))]);
        const auto& from = sys.ladder[pick() % sys.ladder.size()];
        const auto& to = sys.ladder[pick() % sys.ladder.size()];
        const SexValue amount = rnd.next(4);
        const SexValue there = sexag::convert_exact(amount, sys, from.name, to.name);
        const SexValue back = sexag::convert_exact(there, sys, to.name, from.name);
        CHECK(back == amount);
    }
}

TEST_CASE("greedy decomposition matches the tablet spellings") {
    // 1,20 bán of barley regrouped for the granary account.
    const SexValue eighty_ban = sexag::convert_exact(sv("1,20"), "bán", "sìla");
    CHECK(sexag::decompose_mixed(eighty_ban, UnitSystemId::capacity_lidga).str() ==
          "3 líd-ga 1 nigida 2 bán");

    CHECK(sexag::decompose_mixed(sv("0"), UnitSystemId::area).str() == "0");
    CHECK(sexag::decompose_mixed(sv("0"), UnitSystemId::area).parts.empty());

    CHECK(sexag::decompose_mixed(sv("3,45"), UnitSystemId::area).str() ==
          "2 iku 25 sar");
    CHECK(sexag::decompose_mixed(SexValue::from_int(9450000), UnitSystemId::area).str() ==
          "1 šár-gal 27 šár 30 bùr");
    CHECK(sexag::decompose_mixed(SexValue::from_int(1152000),
                                 UnitSystemId::capacity_granary)
              .str() == "1 gur₇");

    // Fractions stay below the base unit.
    CHECK(sexag::decompose_mixed(sv("0;30"), UnitSystemId::area).str() == "0;30 sar");
    CHECK(sexag::decompose_mixed(sv("1;30"), UnitSystemId::capacity_gur).str() ==
          "1;30 sìla");
    const auto frac = sexag::decompose_mixed(sv("1,1;30"), UnitSystemId::capacity_gur);
    CHECK(frac.str() == "1 nigida 1;30 sìla");
    CHECK(frac.remainder_base.str() == "0;30");

    CHECK_THROWS_AS(sexag::decompose_mixed(sv("-1"), UnitSystemId::area),
                    std::domain_error);
}

TEST_CASE("subtractive spelling appears exactly when it saves signs") {
    const auto lidga = UnitSystemId::capacity_lidga;
    const auto gur = UnitSystemId::capacity_gur;
    const auto shorter = QuantityForm::subtractive_if_shorter;

    // 77 nigida: 19 líd-ga 1 nigida costs 13 signs, the rounded form 8.
    const SexValue n77 = sexag::convert_exact(sv("1,17"), "nigida", "sìla");
    CHECK(sexag::decompose_mixed(n77, lidga).str() == "19 líd-ga 1 nigida");
    const auto sub = sexag::decompose_mixed(n77, lidga, shorter);
    CHECK(sub.str() == "20 líd-ga - 3 nigida");
    CHECK(sub.value_in_base() == n77);

    // 11 nigida: both spellings cost 7 signs, so the tie keeps the additive.
    const SexValue n11 = sexag::convert_exact(sv("11"), "nigida", "sìla");
    CHECK(sexag::decompose_mixed(n11, lidga, shorter).str() == "2 líd-ga 3 nigida");

    // 42 nigida: the additive 10 líd-ga 2 nigida is already cheaper.
    const SexValue n42 = sexag::convert_exact(sv("42"), "nigida", "sìla");
    CHECK(sexag::decompose_mixed(n42, lidga, shorter).str() == "10 líd-ga 2 nigida");

    // Whole-unit totals never round up.
    CHECK(sexag::decompose_mixed(sv("7,10,0"), gur, shorter).str() == "1,26 gur");
    CHECK(sexag::decompose_mixed(sv("31,55,0"), gur, shorter).str() == "6,23 gur");

    // A deficit of half or more never rounds up: 150 sìla stays additive
    // rather than "1 gur - 2 nigida 3 bán".
    CHECK(sexag::decompose_mixed(sv("2,30"), gur, shorter).str() ==
          "2 nigida 3 bán");

    // Fractional totals keep the additive spelling.
    CHECK(sexag::decompose_mixed(n77 + sv("0;30"), lidga, shorter).str() ==
          "19 líd-ga 1 nigida 0;30 sìla");
}

TEST_CASE("decomposition preserves the value") {
    oracle::RandomValues rnd(0xdec0de03u);
    std::mt19937_64 pick(0xdec0de04u);
    for (const UnitSystemId system : kAllSystems) {
        for (int i = 0; i < 10000; ++i) {
            const SexValue q = rnd.next_integer(4);
            const QuantityForm form = (pick() & 1) ? QuantityForm::subtractive_if_shorter
                                                   : QuantityForm::additive;
            const MixedQuantity mixed = sexag::decompose_mixed(q, system, form);
            CHECK(mixed.value_in_base() == q);
            SexValue prev;
            bool first = true;
            for (const auto& [unit, count] : mixed.parts) {
                CHECK(count.is_integer());
                CHECK(count.is_positive());
                const SexValue factor = SexValue::from_int(
                    sexag::unit_system(system).find_unit(unit)->base_factor);
                if (!first) CHECK(factor < prev);
                prev = factor;
                first = false;
            }
        }
    }
}

TEST_CASE("quantity text parses back to the same value") {
    const auto lidga = UnitSystemId::capacity_lidga;
    const auto area = UnitSystemId::area;

    CHECK(sexag::parse_quantity("3 líd-ga 1 nigida 2 bán", lidga).value_in_base() ==
          sv("13,20"));
    CHECK(sexag::parse_quantity("3 lidga 1 nigida 2 ban", lidga).value_in_base() ==
          sv("13,20"));
    CHECK(sexag::parse_quantity("1 šár-gal 23 šár 20 bùr", area).value_in_base() ==
          SexValue::from_int(9000000));
    CHECK(sexag::parse_quantity("0", area).is_zero());
    CHECK(sexag::parse_quantity("1;30 sìla", lidga).remainder_base == sv("0;30"));

    // Either minus sign introduces the deficit.
    for (const char* text : {"20 líd-ga - 3 nigida", "20 líd-ga − 3 nigida"}) {
        const MixedQuantity q = sexag::parse_quantity(text, lidga);
        CHECK(q.value_in_base() == sv("1,17,0"));
        CHECK(q.subtractive);
        CHECK(q.str() == "20 líd-ga - 3 nigida");
    }

    CHECK_THROWS_AS(sexag::parse_quantity("", lidga), sexag::parse_error);
    CHECK_THROWS_AS(sexag::parse_quantity("3 iku", lidga), sexag::parse_error);
    CHECK_THROWS_AS(sexag::parse_quantity("3", lidga), sexag::parse_error);
    CHECK_THROWS_AS(sexag::parse_quantity("2 bán 1 nigida", lidga), sexag::parse_error);
    CHECK_THROWS_AS(sexag::parse_quantity("2 bán 2 bán", lidga), sexag::parse_error);
    CHECK_THROWS_AS(sexag::parse_quantity("- 3 nigida", lidga), sexag::parse_error);
    CHECK_THROWS_AS(sexag::parse_quantity("1 líd-ga -", lidga), sexag::parse_error);
    CHECK_THROWS_AS(sexag::parse_quantity("1 líd-ga - 2 nigida - 1 bán", lidga),
                    sexag::parse_error);
    CHECK_THROWS_AS(sexag::parse_quantity("1;30 bán", lidga), sexag::parse_error);
    CHECK_THROWS_AS(sexag::parse_quantity("1 nigida - 2 líd-ga", lidga),
                    sexag::parse_error);
    CHECK_THROWS_AS(sexag::parse_quantity("-2 bán", lidga), sexag::parse_error);
}

TEST_CASE("decomposed spellings roundtrip through the parser") {
    oracle::RandomValues rnd(0x10aded05u);
    std::mt19937_64 pick(0x10aded06u);
    for (int i = 0; i < 2000; ++i) {
        const UnitSystemId system =
            kAllSystems[pick() % (sizeof(kAllSystems) / sizeof(kAllSystems[0]))];
        const QuantityForm form = (pick() & 1) ? QuantityForm::subtractive_if_shorter
                                               : QuantityForm::additive;
        const SexValue q = rnd.next_integer(4);
        const MixedQuantity mixed = sexag::decompose_mixed(q, system, form);
        CHECK(sexag::parse_quantity(mixed.str(), system).value_in_base() == q);
    }
}

TEST_CASE("square of the side, spelled in area units") {
    // The ten-line exercise: sides from 10,0 down to 1,0 ninda.
    const char* sides[] = {"10,0", "9,0", "8,0", "7,0", "6,0",
                           "5,0",  "4,0", "3,0", "2,0", "1,0"};
    const char* areas[] = {
        "3 šár 20 bùr", "2 šár 42 bùr", "2 šár 8 bùr", "1 šár 38 bùr",
        "1 šár 12 bùr", "50 bùr",       "32 bùr",      "18 bùr",
        "8 bùr",        "2 bùr",
    };
    for (int i = 0; i < 10; ++i) {
        CHECK(sexag::square_area_scribal(sv(sides[i])).area.str() == areas[i]);
    }
}

TEST_CASE("square-area trace pins every intermediate") {
    const auto result = sexag::square_area_scribal(sv("50,0"));
    CHECK(sexag::format_trace(result.trace) ==
          "side: 50,0 ninda\n"
          "side in éš: 5,0 éš\n"
          "sar: 41,40,0,0 sar\n"
          "iku: 25,0,0 iku\n"
          "recip 18: 0;3,20\n"
          "bùr: 1,23,20 bùr\n"
          "area: 1 šár-gal 23 šár 20 bùr\n");

    // A side that is no whole count of éš goes through the reciprocal of 1,40.
    const auto odd = sexag::square_area_scribal(sv("15"));
    CHECK(sexag::format_trace(odd.trace) ==
          "side: 15 ninda\n"
          "sar: 3,45 sar\n"
          "recip 1,40: 0;0,36\n"
          "iku: 2;15 iku\n"
          "recip 18: 0;3,20\n"
          "bùr: 0;7,30 bùr\n"
          "area: 2 iku 25 sar\n");

    sexag::SquareAreaOptions direct;
    direct.divide_directly = true;
    const auto divided = sexag::square_area_scribal(sv("2,0"), direct);
    CHECK(sexag::format_trace(divided.trace) ==
          "side: 2,0 ninda\n"
          "side in éš: 12 éš\n"
          "sar: 4,0,0 sar\n"
          "iku: 2,24 iku\n"
          "bùr (direct): 8 bùr\n"
          "area: 8 bùr\n");
    const auto remaindered = sexag::square_area_scribal(sv("1,10"), direct);
    CHECK(sexag::format_trace(remaindered.trace) ==
          "side: 1,10 ninda\n"
          "side in éš: 7 éš\n"
          "sar: 1,21,40 sar\n"
          "iku: 49 iku\n"
          "bùr (direct): 2 bùr\n"
          "iku remainder: 13 iku\n"
          "area: 2 bùr 13 iku\n");

    CHECK_THROWS_AS(sexag::square_area_scribal(sv("0")), std::domain_error);
    CHECK_THROWS_AS(sexag::square_area_scribal(sv("-5")), std::domain_error);
    CHECK_THROWS_AS(sexag::square_area_scribal(sv("15"), direct), std::domain_error);
}

TEST_CASE("the area is the squared side for every surveyed size") {
    for (int side = 5; side <= 3000; side += 5) {
        const auto result = sexag::square_area_scribal(SexValue::from_int(side));
        CHECK(result.area.value_in_base() ==
              SexValue::from_int(static_cast<std::int64_t>(side) * side));
    }
}

TEST_CASE("a fifteen-ninda square is two and a quarter iku") {
    const SexValue sar = sv("15") * sv("15");
    CHECK(sar.str() == "3,45");
    CHECK(sar == SexValue::from_int(225));
    const auto& area = sexag::unit_system(UnitSystemId::area);
    CHECK(sexag::convert_exact(sv("2;15"), area, "iku", "sar") == sar);
}

TEST_CASE("error models parse and name themselves") {
    CHECK(sexag::parse_error_model("recip18=0;3,30") == ErrorModel::recip18_as_3_30);
    CHECK(sexag::parse_error_model("via-15-square") == ErrorModel::via_15_square);
    CHECK_THROWS_AS(sexag::parse_error_model("swap-digits"), std::invalid_argument);
    CHECK(sexag::error_model_name(ErrorModel::recip18_as_3_30) == "recip18=0;3,30");
    CHECK(sexag::error_model_name(ErrorModel::via_15_square) == "via-15-square");
}

TEST_CASE("the recorded slip replays step by step") {
    const std::vector<ErrorModel> both = {ErrorModel::via_15_square,
                                          ErrorModel::recip18_as_3_30};
    const auto replay = sexag::square_area_error_replay(sv("50,0"), both);
    CHECK(sexag::format_trace(replay.trace) ==
          "side: 50,0 ninda\n"
          "side ÷ 15: 3,20\n"
          "square of quotient: 11,6,40\n"
          "recip 18: 0;3,30\n"
          "scaled: 38,53;20\n"
          "doubled: 1,17,46;40\n"
          "quartered: 9,43;20\n"
          "bùr: 1,27,30 bùr\n"
          "area: 1 šár-gal 27 šár 30 bùr\n");

    // The same route with the right reciprocal lands on the clean answer.
    const auto corrected =
        sexag::square_area_error_replay(sv("50,0"), {ErrorModel::via_15_square});
    CHECK(corrected.area.str() == "1 šár-gal 23 šár 20 bùr");
    CHECK(sexag::format_trace(corrected.trace) ==
          "side: 50,0 ninda\n"
          "side ÷ 15: 3,20\n"
          "square of quotient: 11,6,40\n"
          "recip 18: 0;3,20\n"
          "scaled: 37,2;13,20\n"
          "doubled: 1,14,4;26,40\n"
          "quartered: 9,15;33,20\n"
          "bùr: 1,23,20 bùr\n"
          "area: 1 šár-gal 23 šár 20 bùr\n");

    // The wrong reciprocal alone inflates the area the same way.
    const auto wrong_recip =
        sexag::square_area_error_replay(sv("50,0"), {ErrorModel::recip18_as_3_30});
    CHECK(wrong_recip.area.str() == "1 šár-gal 27 šár 30 bùr");

    CHECK_THROWS_AS(sexag::square_area_error_replay(sv("0"), both), std::domain_error);
}

TEST_CASE("an empty slip list reproduces the faithful route") {
    for (int side = 15; side <= 3000; side += 15) {
        const SexValue s = SexValue::from_int(side);
        const auto clean = sexag::square_area_scribal(s);
        const auto replay = sexag::square_area_error_replay(s, {});
        CHECK(replay.area.str() == clean.area.str());
        CHECK(sexag::format_trace(replay.trace) == sexag::format_trace(clean.trace));
        // The alternate route with the right reciprocal agrees too.
        const auto via15 =
            sexag::square_area_error_replay(s, {ErrorModel::via_15_square});
        CHECK(via15.area.value_in_base() == clean.area.value_in_base());
    }
}
