#include <algorithm>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sexag/sexag.hpp"

namespace {

// Exit codes: 0 success, 1 computational failure (irregular divisor,
// domain errors, corpus mismatch), 2 usage or malformed input.
constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

/// Exact decimal rendering: a terminating expansion when one exists,
/// otherwise the value as integer-over-power-of-sixty.
std::string decimal_str(const sexag::SexValue& v) {
    if (v.is_zero()) return "0";
    const std::string sign = v.is_negative() ? "-" : "";
    const sexag::SexValue a = v.abs();
    const auto ten = sexag::SexValue::from_int(10);

    std::string int_part;
    for (sexag::SexValue i = a.truncated(); !i.is_zero();) {
        const auto dm = sexag::divmod(i, ten);
        int_part += static_cast<char>('0' + sexag::to_int64(dm.remainder));
        i = dm.quotient;
    }
    if (int_part.empty()) int_part = "0";
    std::reverse(int_part.begin(), int_part.end());

    std::string frac;
    sexag::SexValue f = a.fraction();
    for (int k = 0; k < 64 && !f.is_zero(); ++k) {
        const sexag::SexValue scaled = f * ten;
        frac += static_cast<char>('0' + sexag::to_int64(scaled.truncated()));
        f = scaled.fraction();
    }
    if (f.is_zero()) {
        return sign + int_part + (frac.empty() ? "" : "." + frac);
    }
    const sexag::SexValue mantissa = a.shifted(-a.point_exp());
    return sign + decimal_str(mantissa) + "/60^" + std::to_string(-a.point_exp());
}

std::string render(const sexag::SexValue& v, bool decimal) {
    return decimal ? decimal_str(v) : v.str();
}

std::string render(const sexag::CalcResult& r, bool decimal) {
    if (r.remainder) {
        return render(r.value, decimal) + " r " + render(*r.remainder, decimal);
    }
    return render(r.value, decimal);
}

int classify(const std::exception& e) {
    if (dynamic_cast<const sexag::parse_error*>(&e)) return kUsage;
    if (dynamic_cast<const std::invalid_argument*>(&e)) return kUsage;
    return kFailure;
}

void report(const std::exception& e) {
    std::cerr << "error: " << e.what();
    if (const auto* p = dynamic_cast<const sexag::parse_error*>(&e)) {
        if (p->column() > 0) std::cerr << " (column " << p->column() << ")";
        if (p->line() > 0) std::cerr << " (line " << p->line() << ")";
    }
    std::cerr << '\n';
}

/// Runs `handler` on the argument when given, else on every nonempty line
/// of standard input, keeping the worst exit code.
int run_or_read_lines(const std::string& arg, int (*handler)(const std::string&)) {
    if (!arg.empty()) return handler(arg);
    int worst = kOk;
    std::string line;
    while (std::getline(std::cin, line)) {
        const auto begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos) continue;
        worst = std::max(worst, handler(line));
    }
    return worst;
}

struct CalcArgs {
    std::string expr;
    bool divmod = false;
    bool decimal = false;
} calc_args;

int run_calc_line(const std::string& text) {
    try {
        std::cout << render(sexag::evaluate_expression(text, calc_args.divmod),
                            calc_args.decimal)
                  << '\n';
        return kOk;
    } catch (const std::exception& e) {
        report(e);
        return classify(e);
    }
}

struct WordsArgs {
    std::string arg;
    bool parse_mode = false;
    bool decimal = false;
} words_args;

int run_words_parse_line(const std::string& text) {
    try {
        const std::uint32_t value = sexag::words_to_int(text);
        if (words_args.decimal) {
            std::cout << value << '\n';
        } else {
            std::cout << sexag::SexValue::from_int(value).str() << '\n';
        }
        return kOk;
    } catch (const std::exception& e) {
        report(e);
        return classify(e);
    }
}

int run_words_number(const std::string& text) {
    const std::uint64_t value = sexag::to_uint64(sexag::SexValue::parse(text));
    if (value == 0 || value >= sexag::kWordLimit) {
        throw std::invalid_argument("no numeral phrase spells " + text);
    }
    std::cout << sexag::int_to_words(static_cast<std::uint32_t>(value)).str() << '\n';
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact base-60 arithmetic and Sumerian metrology"};
    app.require_subcommand(1);

    auto* calc = app.add_subcommand(
        "calc", "evaluate an expression over sexagesimal literals");
    calc->add_option("EXPR", calc_args.expr,
                     "expression; omit to evaluate each stdin line");
    calc->add_flag("--divmod", calc_args.divmod,
                   "answer one division as quotient and remainder");
    calc->add_flag("--decimal", calc_args.decimal, "print decimal instead");

    std::string recip_arg;
    bool recip_decimal = false;
    auto* recip =
        app.add_subcommand("recip", "reciprocal of a regular sexagesimal value");
    recip->add_option("N", recip_arg, "a positive literal, e.g. 18 or 1,40")
        ->required();
    recip->add_flag("--decimal", recip_decimal, "print decimal instead");

    std::string regular_arg;
    std::string table_arg;
    auto* regular = app.add_subcommand(
        "regular", "factor a whole number over 2, 3, 5 and judge regularity");
    regular->add_option("N", regular_arg, "a positive whole literal");
    regular->add_option("--table", table_arg,
                        "list every regular number up to this literal, "
                        "with reciprocals");

    auto* words =
        app.add_subcommand("words", "numeral words for a number, or back");
    words->add_option("N", words_args.arg,
                      "a whole literal, or with --parse a word phrase");
    words->add_flag("--parse", words_args.parse_mode,
                    "read a phrase; omit the argument to read stdin lines");
    words->add_flag("--decimal", words_args.decimal,
                    "print parsed values in decimal");

    std::string signs_arg;
    std::string signs_style = "wedge";
    auto* signs = app.add_subcommand("signs", "sign tally for a whole number");
    signs->add_option("N", signs_arg, "a positive whole literal")->required();
    signs->add_option("--style", signs_style, "sign style")
        ->check(CLI::IsMember({"round", "wedge"}));

    std::string convert_amount, convert_from, convert_to;
    bool convert_decimal = false;
    auto* convert =
        app.add_subcommand("convert", "convert between units of one system");
    convert->add_option("AMOUNT", convert_amount, "a sexagesimal literal")
        ->required();
    convert->add_option("FROM", convert_from, "source unit")->required();
    convert->add_option("TO", convert_to, "target unit")->required();
    convert->add_flag("--decimal", convert_decimal, "print decimal instead");

    std::string side_arg;
    std::vector<std::string> model_args;
    bool trace = false;
    auto* square = app.add_subcommand(
        "square-area", "area of a square field, the scribal way");
    square->add_option("SIDE", side_arg, "side length in ninda")->required();
    square->add_option("--error-model", model_args,
                       "replay a documented slip (repeatable): "
                       "recip18=0;3,30, via-15-square");
    square->add_flag("--trace", trace, "print every intermediate step");

    std::string ration_heads;
    std::string ration_unit;
    std::string ration_per_head = "1";
    bool ration_subtractive = false;
    auto* ration =
        app.add_subcommand("ration", "barley for donkeys at 1 nigida a head");
    ration->add_option("HEADS", ration_heads, "head count literal")->required();
    ration->add_option("--unit", ration_unit, "big unit to balance in")
        ->required()
        ->check(CLI::IsMember({"gur", "lidga", "lid-ga", "líd-ga"}));
    ration->add_flag("--subtractive", ration_subtractive,
                     "allow the rounded-up spelling when it saves signs");
    ration->add_option("--per-head", ration_per_head,
                       "nigida per head (default 1)");

    std::string granary_stock, granary_per_head;
    std::string granary_system = "capacity-granary";
    auto* granary =
        app.add_subcommand("granary", "divide a stock at a fixed sìla ration");
    granary->add_option("STOCK", granary_stock,
                        "quantity (\"1 gur₇\") or plain sìla literal")
        ->required();
    granary->add_option("PER-HEAD", granary_per_head, "sìla per man")->required();
    granary->add_option("--system", granary_system,
                        "unit system for STOCK (default capacity-granary)");

    std::string verify_path;
    bool machine = false;
    auto* verify =
        app.add_subcommand("verify", "replay a corpus file and classify records");
    verify->add_option("FILE", verify_path, "corpus file")->required();
    verify->add_flag("--machine", machine, "tab-separated one-line-per-record");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (calc->parsed()) {
            return run_or_read_lines(calc_args.expr, run_calc_line);
        }
        if (recip->parsed()) {
            const sexag::SexValue n = sexag::SexValue::parse(recip_arg);
            try {
                std::cout << render(sexag::reciprocal_value(n), recip_decimal)
                          << '\n';
            } catch (const sexag::irregular_error& e) {
                // An answer, not a failure: the scribes wrote "igi n nu".
                std::cout << recip_arg << " has no reciprocal: " << e.what() << '\n';
            }
            return kOk;
        }
        if (regular->parsed()) {
            if (!table_arg.empty()) {
                const std::uint64_t limit =
                    sexag::to_uint64(sexag::SexValue::parse(table_arg));
                for (const auto& [n, recip_value] : sexag::reciprocal_table(limit)) {
                    std::cout << sexag::SexValue::from_int(
                                     static_cast<std::int64_t>(n))
                                     .str()
                              << '\t' << recip_value.str() << '\n';
                }
                return kOk;
            }
            if (regular_arg.empty()) {
                throw std::invalid_argument("give a literal or --table LIMIT");
            }
            const std::uint64_t n =
                sexag::to_uint64(sexag::SexValue::parse(regular_arg));
            const auto witness = sexag::strip_235(n);
            std::cout << regular_arg << " = 2^" << witness.alpha << " 3^"
                      << witness.beta << " 5^" << witness.gamma;
            if (witness.regular()) {
                std::cout << ", regular; reciprocal "
                          << sexag::reciprocal(n).str() << '\n';
            } else {
                std::cout << " x " << witness.residue
                          << ", irregular (the residue divides no power of 60)\n";
            }
            return kOk;
        }
        if (words->parsed()) {
            if (words_args.parse_mode) {
                return run_or_read_lines(words_args.arg, run_words_parse_line);
            }
            if (words_args.arg.empty()) {
                throw std::invalid_argument("give a literal, or --parse for phrases");
            }
            return run_words_number(words_args.arg);
        }
        if (signs->parsed()) {
            const std::uint64_t n =
                sexag::to_uint64(sexag::SexValue::parse(signs_arg));
            if (n == 0 || n >= sexag::kWordLimit) {
                throw std::invalid_argument("no sign tally spells " + signs_arg);
            }
            const auto style = signs_style == "round" ? sexag::SignStyle::round
                                                      : sexag::SignStyle::wedge;
            std::cout << sexag::format_signs(sexag::sign_decomposition(
                             static_cast<std::uint32_t>(n), style))
                      << '\n';
            return kOk;
        }
        if (convert->parsed()) {
            const sexag::SexValue amount = sexag::SexValue::parse(convert_amount);
            std::cout << render(sexag::convert_exact(amount, convert_from,
                                                     convert_to),
                                convert_decimal)
                      << '\n';
            return kOk;
        }
        if (square->parsed()) {
            std::vector<sexag::ErrorModel> models;
            for (const std::string& name : model_args) {
                models.push_back(sexag::parse_error_model(name));
            }
            const auto result = sexag::square_area_error_replay(
                sexag::SexValue::parse(side_arg), models);
            if (trace) {
                std::cout << sexag::format_trace(result.trace);
            } else {
                std::cout << result.area.str() << '\n';
            }
            return kOk;
        }
        if (ration->parsed()) {
            const auto form = ration_subtractive
                                  ? sexag::QuantityForm::subtractive_if_shorter
                                  : sexag::QuantityForm::additive;
            std::cout << sexag::donkey_ration(
                             sexag::SexValue::parse(ration_heads),
                             sexag::parse_big_unit(ration_unit), form,
                             sexag::SexValue::parse(ration_per_head))
                             .str()
                      << '\n';
            return kOk;
        }
        if (granary->parsed()) {
            const sexag::UnitSystem* system =
                sexag::find_unit_system(granary_system);
            if (!system) {
                throw std::invalid_argument("unknown unit system " + granary_system);
            }
            sexag::MixedQuantity stock;
            try {
                // A bare literal counts sìla.
                stock = sexag::decompose_mixed(sexag::SexValue::parse(granary_stock),
                                               system->id);
            } catch (const sexag::parse_error&) {
                stock = sexag::parse_quantity(granary_stock, system->id);
            }
            const auto result = sexag::granary_division(
                stock, sexag::SexValue::parse(granary_per_head));
            std::cout << result.heads.str() << " r " << result.remainder.str()
                      << '\n';
            return kOk;
        }
        if (verify->parsed()) {
            const auto corpus_report =
                sexag::verify_all(sexag::load_corpus(verify_path));
            std::cout << (machine ? sexag::format_report_machine(corpus_report)
                                  : sexag::format_report(corpus_report));
            return corpus_report.ok() ? kOk : kFailure;
        }
    } catch (const std::exception& e) {
        report(e);
        return classify(e);
    }
    return kUsage;
}
