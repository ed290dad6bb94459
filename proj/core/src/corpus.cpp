#include "sexag/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "sexag/errors.hpp"

namespace sexag {
namespace {

struct RawField {
    std::string key;
    std::string value;
    int line;
    bool used = false;
};

struct Block {
    int first_line = 0;
    std::vector<RawField> fields;
};

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

[[noreturn]] void fail(const std::string& message, int line) {
    throw parse_error(message, line, 0);
}

std::vector<Block> split_blocks(std::string_view text) {
    std::vector<Block> blocks;
    Block current;
    int line_no = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i != text.size() && text[i] != '\n') continue;
        ++line_no;
        std::string line(text.substr(start, i - start));
        start = i + 1;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const std::string body = trim(line);
        if (body.empty()) {
            if (!current.fields.empty()) {
                blocks.push_back(std::move(current));
                current = {};
            }
            continue;
        }
        if (body.front() == '#') continue;
        const std::size_t colon = body.find(':');
        if (colon == std::string::npos) {
            fail("expected \"key: value\"", line_no);
        }
        RawField field;
        field.key = trim(body.substr(0, colon));
        field.value = trim(body.substr(colon + 1));
        field.line = line_no;
        if (field.key.empty()) fail("empty field key", line_no);
        if (current.fields.empty()) current.first_line = line_no;
        current.fields.push_back(std::move(field));
        if (i == text.size()) break;
    }
    if (!current.fields.empty()) blocks.push_back(std::move(current));
    return blocks;
}

class BlockReader {
 public:
    explicit BlockReader(Block& block) : block_(block) {}

    RawField* take(std::string_view key) {
        RawField* found = nullptr;
        for (RawField& f : block_.fields) {
            if (f.key != key) continue;
            if (found) fail("duplicate field \"" + f.key + "\"", f.line);
            found = &f;
        }
        if (found) found->used = true;
        return found;
    }

    RawField& require(std::string_view key) {
        if (RawField* f = take(key)) return *f;
        fail("record is missing \"" + std::string(key) + "\"", block_.first_line);
    }

    std::vector<RawField*> take_all(std::string_view key) {
        std::vector<RawField*> found;
        for (RawField& f : block_.fields) {
            if (f.key == key) {
                f.used = true;
                found.push_back(&f);
            }
        }
        return found;
    }

    void finish(std::string_view kind_name) const {
        for (const RawField& f : block_.fields) {
            if (!f.used) {
                fail("field \"" + f.key + "\" does not apply to kind " +
                         std::string(kind_name),
                     f.line);
            }
        }
    }

 private:
    Block& block_;
};

SexValue parse_literal(const RawField& f) {
    try {
        return SexValue::parse(f.value);
    } catch (const parse_error& e) {
        throw parse_error(std::string(e.what()) + " in \"" + f.key + "\"", f.line,
                          e.column());
    }
}

MixedQuantity parse_quantity_field(const RawField& f, UnitSystemId system) {
    try {
        return parse_quantity(f.value, system);
    } catch (const parse_error& e) {
        throw parse_error(std::string(e.what()) + " in \"" + f.key + "\"", f.line,
                          e.column());
    }
}

SexValue parse_whole_count(const RawField& f) {
    const SexValue v = parse_literal(f);
    if (!v.is_integer() || !v.is_positive()) {
        fail("\"" + f.key + "\" must be a whole count of at least 1", f.line);
    }
    return v;
}

UnitSystemId parse_capacity_system(const RawField& f) {
    const UnitSystem* sys = find_unit_system(f.value);
    if (!sys || (sys->id != UnitSystemId::capacity_gur &&
                 sys->id != UnitSystemId::capacity_lidga &&
                 sys->id != UnitSystemId::capacity_granary)) {
        fail("\"" + f.value + "\" is not a capacity system", f.line);
    }
    return sys->id;
}

TabletRecord build_record(Block& block) {
    BlockReader reader(block);
    TabletRecord r;
    r.id = reader.require("id").value;
    if (r.id.empty()) fail("empty record id", block.first_line);

    const RawField& kind_field = reader.require("kind");
    try {
        r.kind = parse_tablet_kind(kind_field.value);
    } catch (const std::invalid_argument& e) {
        fail(e.what(), kind_field.line);
    }

    if (const RawField* f = reader.take("comment")) r.comment = f->value;

    if (const RawField* f = reader.take("expect")) {
        if (f->value == "scribal-error") {
            r.expect_error = true;
        } else if (f->value != "correct") {
            fail("expect must be \"correct\" or \"scribal-error\"", f->line);
        }
    }
    if (const RawField* f = reader.take("error-model")) {
        // Space-separated: model names carry no spaces, but may carry commas.
        std::istringstream items(f->value);
        std::string item;
        while (items >> item) {
            try {
                r.error_models.push_back(parse_error_model(item));
            } catch (const std::invalid_argument& e) {
                fail(e.what(), f->line);
            }
        }
        if (r.error_models.empty()) fail("empty error-model list", f->line);
    }
    if (const RawField* f = reader.take("recorded-form")) {
        if (f->value == "additive") {
            r.recorded_form = RecordedForm::additive;
        } else if (f->value == "subtractive") {
            r.recorded_form = RecordedForm::subtractive;
        } else {
            fail("recorded-form must be \"additive\" or \"subtractive\"", f->line);
        }
    }

    const auto check_error_keys_allowed = [&](bool allowed) {
        if (!allowed && r.expect_error) {
            fail("expect: scribal-error only applies to single-side square-area records",
                 block.first_line);
        }
        if (!allowed && !r.error_models.empty()) {
            fail("error-model only applies to single-side square-area records",
                 block.first_line);
        }
    };
    const auto check_form_key_allowed = [&](bool allowed) {
        if (!allowed && r.recorded_form) {
            fail("recorded-form does not apply to this record", block.first_line);
        }
    };
    const auto check_declared_form = [&](const RawField& where) {
        if (!r.recorded_form) return;
        const bool declared_sub = *r.recorded_form == RecordedForm::subtractive;
        if (declared_sub != r.recorded_quantity.subtractive.has_value()) {
            fail("the recorded spelling contradicts recorded-form", where.line);
        }
    };

    switch (r.kind) {
        case TabletKind::mul: {
            check_error_keys_allowed(false);
            check_form_key_allowed(false);
            r.a = parse_literal(reader.require("a"));
            r.b = parse_literal(reader.require("b"));
            const RawField& rec = reader.require("recorded");
            r.recorded_value = parse_literal(rec);
            r.recorded_text = rec.value;
            break;
        }
        case TabletKind::granary_div: {
            check_error_keys_allowed(false);
            check_form_key_allowed(false);
            r.system = parse_capacity_system(reader.require("system"));
            r.stock = parse_quantity_field(reader.require("stock"), r.system);
            r.per_head = parse_whole_count(reader.require("per-head"));
            const RawField& rec = reader.require("recorded");
            r.recorded_value = parse_literal(rec);
            r.recorded_text = rec.value;
            if (const RawField* f = reader.take("repaid")) {
                r.repaid = parse_literal(*f);
                if (r.repaid->is_negative() || !r.repaid->is_integer()) {
                    fail("repaid must be a whole nonnegative count of sìla", f->line);
                }
                r.recorded_text += " r " + r.repaid->str();
            }
            break;
        }
        case TabletKind::square_area: {
            const auto rows = reader.take_all("row");
            if (!rows.empty()) {
                check_error_keys_allowed(false);
                check_form_key_allowed(false);
                std::string joined;
                for (const RawField* f : rows) {
                    const std::size_t eq = f->value.find('=');
                    if (eq == std::string::npos) {
                        fail("row must read \"SIDE = AREA\"", f->line);
                    }
                    SquareRow row;
                    RawField side_part{f->key, trim(f->value.substr(0, eq)), f->line};
                    RawField area_part{f->key, trim(f->value.substr(eq + 1)), f->line};
                    row.side = parse_literal(side_part);
                    if (!row.side.is_positive()) {
                        fail("row side must be positive", f->line);
                    }
                    row.recorded = parse_quantity_field(area_part, UnitSystemId::area);
                    row.recorded_text = area_part.value;
                    if (!joined.empty()) joined += "; ";
                    joined += row.recorded_text;
                    r.rows.push_back(std::move(row));
                }
                r.recorded_text = joined;
                break;
            }
            check_error_keys_allowed(true);
            check_form_key_allowed(true);
            if (r.expect_error && r.error_models.empty()) {
                fail("a scribal-error record needs an error-model", block.first_line);
            }
            if (!r.expect_error && !r.error_models.empty()) {
                fail("error-model needs expect: scribal-error", block.first_line);
            }
            const RawField& side = reader.require("side");
            r.side = parse_literal(side);
            if (!r.side.is_positive()) fail("side must be positive", side.line);
            const RawField& rec = reader.require("recorded");
            r.recorded_quantity = parse_quantity_field(rec, UnitSystemId::area);
            r.recorded_text = rec.value;
            check_declared_form(rec);
            break;
        }
        case TabletKind::capacity_total: {
            check_error_keys_allowed(false);
            check_form_key_allowed(true);
            r.system = parse_capacity_system(reader.require("system"));
            r.heads = parse_whole_count(reader.require("heads"));
            r.each = parse_quantity_field(reader.require("each"), r.system);
            const RawField& rec = reader.require("recorded");
            r.recorded_quantity = parse_quantity_field(rec, r.system);
            r.recorded_text = rec.value;
            check_declared_form(rec);
            break;
        }
        case TabletKind::donkey_ration: {
            check_error_keys_allowed(false);
            check_form_key_allowed(true);
            r.heads = parse_whole_count(reader.require("heads"));
            const RawField& unit = reader.require("big-unit");
            try {
                r.big_unit = parse_big_unit(unit.value);
            } catch (const std::invalid_argument& e) {
                fail(e.what(), unit.line);
            }
            r.system = r.big_unit == BigUnit::gur ? UnitSystemId::capacity_gur
                                                  : UnitSystemId::capacity_lidga;
            const RawField& rec = reader.require("recorded");
            r.recorded_quantity = parse_quantity_field(rec, r.system);
            r.recorded_text = rec.value;
            check_declared_form(rec);
            break;
        }
    }
    reader.finish(tablet_kind_name(r.kind));
    return r;
}

/// The verifier must land on the declared spelling when a form is declared,
/// otherwise any spelling of the right value passes.
bool spelling_matches(const TabletRecord& r, const MixedQuantity& recorded,
                      UnitSystemId system, std::string& computed) {
    const SexValue value = recorded.value_in_base();
    if (!r.recorded_form) return true;
    const MixedQuantity chosen =
        decompose_mixed(value, system, QuantityForm::subtractive_if_shorter);
    computed = chosen.str();
    return chosen.str() == recorded.str();
}

}  // namespace

TabletKind parse_tablet_kind(std::string_view text) {
    if (text == "mul") return TabletKind::mul;
    if (text == "granary-div") return TabletKind::granary_div;
    if (text == "square-area") return TabletKind::square_area;
    if (text == "capacity-total") return TabletKind::capacity_total;
    if (text == "donkey-ration") return TabletKind::donkey_ration;
    std::ostringstream msg;
    msg << "unknown kind \"" << text
        << "\" (known: mul, granary-div, square-area, capacity-total, donkey-ration)";
    throw std::invalid_argument(msg.str());
}

std::string_view tablet_kind_name(TabletKind kind) {
    switch (kind) {
        case TabletKind::mul: return "mul";
        case TabletKind::granary_div: return "granary-div";
        case TabletKind::square_area: return "square-area";
        case TabletKind::capacity_total: return "capacity-total";
        case TabletKind::donkey_ration: return "donkey-ration";
    }
    throw std::invalid_argument("unknown kind");
}

std::string_view verdict_status_name(VerdictStatus status) {
    switch (status) {
        case VerdictStatus::match: return "match";
        case VerdictStatus::error_reproduced: return "error-reproduced";
        case VerdictStatus::mismatch: return "mismatch";
    }
    throw std::invalid_argument("unknown status");
}

std::vector<TabletRecord> parse_corpus(std::string_view text) {
    std::vector<TabletRecord> records;
    for (Block& block : split_blocks(text)) {
        records.push_back(build_record(block));
    }
    return records;
}

std::vector<TabletRecord> load_corpus(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read corpus file " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_corpus(buffer.str());
}

Verdict verify_record(const TabletRecord& r) {
    Verdict v;
    v.id = r.id;
    v.recorded = r.recorded_text;
    try {
        switch (r.kind) {
            case TabletKind::mul: {
                const SexValue product = r.a * r.b;
                v.computed = product.str();
                v.status = product == r.recorded_value ? VerdictStatus::match
                                                       : VerdictStatus::mismatch;
                break;
            }
            case TabletKind::granary_div: {
                const RationResult result = granary_division(r.stock, r.per_head);
                v.computed = result.heads.str() + " r " + result.remainder.str();
                const bool heads_ok = result.heads == r.recorded_value;
                const bool repaid_ok = !r.repaid || result.remainder == *r.repaid;
                v.status = heads_ok && repaid_ok ? VerdictStatus::match
                                                 : VerdictStatus::mismatch;
                break;
            }
            case TabletKind::square_area: {
                if (!r.rows.empty()) {
                    bool all_ok = true;
                    std::string joined;
                    for (const SquareRow& row : r.rows) {
                        const auto result = square_area_scribal(row.side);
                        if (!joined.empty()) joined += "; ";
                        joined += result.area.str();
                        all_ok = all_ok && result.area.value_in_base() ==
                                               row.recorded.value_in_base();
                    }
                    v.computed = joined;
                    v.status =
                        all_ok ? VerdictStatus::match : VerdictStatus::mismatch;
                    break;
                }
                const auto clean = square_area_scribal(r.side);
                const SexValue recorded_value = r.recorded_quantity.value_in_base();
                if (r.expect_error) {
                    const auto replay = square_area_error_replay(r.side, r.error_models);
                    v.computed = replay.area.str();
                    v.trace = replay.trace;
                    const bool slip_reproduced =
                        replay.area.value_in_base() == recorded_value &&
                        clean.area.value_in_base() != recorded_value;
                    v.status = slip_reproduced ? VerdictStatus::error_reproduced
                                               : VerdictStatus::mismatch;
                } else {
                    v.computed = clean.area.str();
                    v.trace = clean.trace;
                    bool ok = clean.area.value_in_base() == recorded_value;
                    if (ok) {
                        ok = spelling_matches(r, r.recorded_quantity, UnitSystemId::area,
                                              v.computed);
                    }
                    v.status = ok ? VerdictStatus::match : VerdictStatus::mismatch;
                }
                break;
            }
            case TabletKind::capacity_total: {
                const MixedQuantity total = capacity_total(r.heads, r.each);
                v.computed = total.str();
                bool ok = total.value_in_base() == r.recorded_quantity.value_in_base();
                if (ok) {
                    ok = spelling_matches(r, r.recorded_quantity, r.system, v.computed);
                }
                v.status = ok ? VerdictStatus::match : VerdictStatus::mismatch;
                break;
            }
            case TabletKind::donkey_ration: {
                const MixedQuantity spelled =
                    donkey_ration(r.heads, r.big_unit, QuantityForm::additive);
                v.computed = spelled.str();
                bool ok =
                    spelled.value_in_base() == r.recorded_quantity.value_in_base();
                if (ok) {
                    ok = spelling_matches(r, r.recorded_quantity, r.system, v.computed);
                }
                v.status = ok ? VerdictStatus::match : VerdictStatus::mismatch;
                break;
            }
        }
    } catch (const std::exception& e) {
        v.status = VerdictStatus::mismatch;
        v.computed = std::string("error: ") + e.what();
    }
    return v;
}

CorpusReport verify_all(const std::vector<TabletRecord>& records) {
    CorpusReport report;
    for (const TabletRecord& record : records) {
        Verdict v = verify_record(record);
        switch (v.status) {
            case VerdictStatus::match: ++report.matches; break;
            case VerdictStatus::error_reproduced: ++report.errors_reproduced; break;
            case VerdictStatus::mismatch: ++report.mismatches; break;
        }
        report.verdicts.push_back(std::move(v));
    }
    return report;
}

namespace {

// Code points, not bytes, so the diacritic-heavy names align.
std::size_t display_width(std::string_view s) {
    std::size_t width = 0;
    for (const char c : s) {
        if ((static_cast<unsigned char>(c) & 0xc0) != 0x80) ++width;
    }
    return width;
}

}  // namespace

std::string format_report(const CorpusReport& report) {
    std::size_t id_width = 2, status_width = 6, computed_width = 8;
    for (const Verdict& v : report.verdicts) {
        id_width = std::max(id_width, display_width(v.id));
        status_width = std::max(status_width, verdict_status_name(v.status).size());
        computed_width = std::max(computed_width, display_width(v.computed));
    }
    std::ostringstream out;
    for (const Verdict& v : report.verdicts) {
        out << v.id << std::string(id_width - display_width(v.id) + 2, ' ');
        const std::string_view status = verdict_status_name(v.status);
        out << status << std::string(status_width - status.size() + 2, ' ');
        out << v.computed
            << std::string(computed_width - display_width(v.computed) + 2, ' ');
        out << v.recorded << '\n';
    }
    out << report.verdicts.size() << " records: " << report.matches << " match, "
        << report.errors_reproduced << " error-reproduced, " << report.mismatches
        << " mismatch\n";
    return out.str();
}

std::string format_report_machine(const CorpusReport& report) {
    std::ostringstream out;
    for (const Verdict& v : report.verdicts) {
        out << v.id << '\t' << verdict_status_name(v.status) << '\t' << v.computed
            << '\t' << v.recorded << '\n';
    }
    return out.str();
}

}  // namespace sexag
