#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sexag/metrology.hpp"
#include "sexag/rations.hpp"
#include "sexag/sexvalue.hpp"

namespace sexag {

enum class TabletKind {
    mul,
    granary_div,
    square_area,
    capacity_total,
    donkey_ration,
};

TabletKind parse_tablet_kind(std::string_view text);
std::string_view tablet_kind_name(TabletKind kind);

/// What shape the tablet's recorded spelling takes. Declaring it opts the
/// record into form checking: the verifier must arrive at that spelling,
/// not merely the value.
enum class RecordedForm { additive, subtractive };

/// One row of a multi-line exercise tablet: a side and the recorded area.
struct SquareRow {
    SexValue side;
    MixedQuantity recorded;
    std::string recorded_text;
};

/// A documented computation: the inputs a tablet states and the result it
/// records. Which fields are meaningful depends on `kind`; parse_corpus
/// fills and validates them.
struct TabletRecord {
    std::string id;
    TabletKind kind = TabletKind::mul;
    bool expect_error = false;             // expect: scribal-error
    std::vector<ErrorModel> error_models;  // how to replay the slip
    std::optional<RecordedForm> recorded_form;  // opt-in spelling check
    std::string comment;
    std::string recorded_text;  // as written in the file

    SexValue a, b;                               // mul
    UnitSystemId system = UnitSystemId::length;  // granary-div, capacity-total
    MixedQuantity stock;                         // granary-div
    SexValue per_head;                           // granary-div, sìla
    std::optional<SexValue> repaid;              // granary-div
    SexValue recorded_value;                     // mul, granary-div (heads)
    SexValue side;                               // square-area
    std::vector<SquareRow> rows;                 // square-area, multi-row
    MixedQuantity recorded_quantity;  // square-area, capacity-total, donkey-ration
    SexValue heads;                   // capacity-total, donkey-ration
    MixedQuantity each;               // capacity-total
    BigUnit big_unit = BigUnit::gur;  // donkey-ration
};

enum class VerdictStatus { match, error_reproduced, mismatch };

std::string_view verdict_status_name(VerdictStatus status);

/// The outcome of replaying one record: match when the fresh computation
/// agrees with a correct tablet, error-reproduced when the modeled slip
/// lands exactly on an erroneous tablet's figure while the clean route
/// does not, mismatch otherwise.
struct Verdict {
    std::string id;
    VerdictStatus status = VerdictStatus::mismatch;
    std::string computed;
    std::string recorded;
    std::vector<TraceStep> trace;
};

struct CorpusReport {
    std::vector<Verdict> verdicts;  // input order
    int matches = 0;
    int errors_reproduced = 0;
    int mismatches = 0;

    bool ok() const { return mismatches == 0; }
};

/// Parses blank-line-separated blocks of "key: value" lines. Lines starting
/// with '#' are skipped. Throws parse_error with the offending line number.
std::vector<TabletRecord> parse_corpus(std::string_view text);

/// Reads and parses a corpus file; std::runtime_error when unreadable.
std::vector<TabletRecord> load_corpus(const std::string& path);

Verdict verify_record(const TabletRecord& record);

CorpusReport verify_all(const std::vector<TabletRecord>& records);

/// Aligned per-record lines followed by a summary count line.
std::string format_report(const CorpusReport& report);

/// One line per record: "id<TAB>status<TAB>computed<TAB>recorded".
std::string format_report_machine(const CorpusReport& report);

}  // namespace sexag
