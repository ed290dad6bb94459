#include "sexag/corpus.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "sexag/errors.hpp"

using sexag::CorpusReport;
using sexag::TabletKind;
using sexag::TabletRecord;
using sexag::Verdict;
using sexag::VerdictStatus;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string replace_once(std::string text, const std::string& from,
                         const std::string& to) {
    const std::size_t at = text.find(from);
    REQUIRE(at != std::string::npos);
    return text.replace(at, from.size(), to);
}

}  // namespace

TEST_CASE("the bundled corpus parses into thirteen records") {
    const auto records = sexag::load_corpus(SEXAG_CORPUS_PATH);
    REQUIRE(records.size() == 13);

    const char* ids[] = {"WF-2",    "TSŠ-50",       "SF-82",  "TSŠ-188",
                         "TSŠ-188-clean", "TSŠ-81", "TSŠ-882", "TSŠ-882-emmer",
                         "WF-1",    "WF-7",         "WF-14",  "TSŠ-115",
                         "NTSŠ-211"};
    for (std::size_t i = 0; i < records.size(); ++i) {
        CHECK(records[i].id == ids[i]);
    }

    CHECK(records[0].kind == TabletKind::mul);
    CHECK(records[1].kind == TabletKind::granary_div);
    CHECK(records[2].kind == TabletKind::square_area);
    CHECK(records[2].rows.size() == 10);
    CHECK(records[3].expect_error);
    CHECK(records[3].error_models.size() == 2);
    CHECK(records[11].recorded_form == sexag::RecordedForm::subtractive);
    CHECK(records[12].recorded_form == sexag::RecordedForm::additive);
    CHECK(!records[0].comment.empty());
}

TEST_CASE("every bundled record replays to its tablet") {
    const auto records = sexag::load_corpus(SEXAG_CORPUS_PATH);
    const CorpusReport report = sexag::verify_all(records);
    REQUIRE(report.verdicts.size() == records.size());
    CHECK(report.ok());
    CHECK(report.mismatches == 0);
    CHECK(report.errors_reproduced == 1);
    CHECK(report.matches == 12);

    // Order is preserved.
    for (std::size_t i = 0; i < records.size(); ++i) {
        CHECK(report.verdicts[i].id == records[i].id);
    }

    const Verdict& wf2 = report.verdicts[0];
    CHECK(wf2.status == VerdictStatus::match);
    CHECK(wf2.computed == "2,41,0");
    CHECK(wf2.recorded == "2,41,0");

    const Verdict& granary = report.verdicts[1];
    CHECK(granary.status == VerdictStatus::match);
    CHECK(granary.computed == "45,42,51 r 3");

    const Verdict& ten_rows = report.verdicts[2];
    CHECK(ten_rows.status == VerdictStatus::match);
    CHECK(ten_rows.computed ==
          "3 šár 20 bùr; 2 šár 42 bùr; 2 šár 8 bùr; 1 šár 38 bùr; 1 šár 12 bùr; "
          "50 bùr; 32 bùr; 18 bùr; 8 bùr; 2 bùr");

    const Verdict& slip = report.verdicts[3];
    CHECK(slip.status == VerdictStatus::error_reproduced);
    CHECK(slip.computed == "1 šár-gal 27 šár 30 bùr");
    CHECK(slip.recorded == "1,27,30 bùr");
    CHECK(!slip.trace.empty());

    const Verdict& clean = report.verdicts[4];
    CHECK(clean.status == VerdictStatus::match);
    CHECK(clean.computed == "1 šár-gal 23 šár 20 bùr");

    CHECK(report.verdicts[11].computed == "20 líd-ga - 3 nigida");
    CHECK(report.verdicts[12].computed == "10 líd-ga 2 nigida");
}

TEST_CASE("verification is deterministic") {
    const auto records = sexag::load_corpus(SEXAG_CORPUS_PATH);
    const std::string first = sexag::format_report(sexag::verify_all(records));
    const std::string second = sexag::format_report(sexag::verify_all(records));
    CHECK(first == second);
    CHECK(first.find("13 records: 12 match, 1 error-reproduced, 0 mismatch") !=
          std::string::npos);
}

TEST_CASE("the machine report is one tab-separated line per record") {
    const auto records = sexag::load_corpus(SEXAG_CORPUS_PATH);
    const std::string report = sexag::format_report_machine(sexag::verify_all(records));
    std::istringstream lines(report);
    std::string line;
    int count = 0;
    while (std::getline(lines, line)) {
        ++count;
        std::vector<std::string> cells;
        std::size_t start = 0;
        for (std::size_t tab = line.find('\t'); tab != std::string::npos;
             tab = line.find('\t', start)) {
            cells.push_back(line.substr(start, tab - start));
            start = tab + 1;
        }
        cells.push_back(line.substr(start));
        REQUIRE(cells.size() == 4);
        CHECK((cells[1] == "match" || cells[1] == "error-reproduced"));
    }
    CHECK(count == 13);
    CHECK(report.find("WF-2\tmatch\t2,41,0\t2,41,0\n") != std::string::npos);
    CHECK(report.find("TSŠ-50\tmatch\t45,42,51 r 3\t45,42,51 r 3\n") !=
          std::string::npos);
}

TEST_CASE("tampering with a recorded figure flips the verdict") {
    const std::string pristine = read_file(SEXAG_CORPUS_PATH);

    const auto tampered = sexag::parse_corpus(
        replace_once(pristine, "recorded: 2,41,0", "recorded: 2,41,1"));
    const CorpusReport report = sexag::verify_all(tampered);
    CHECK(!report.ok());
    CHECK(report.mismatches == 1);
    CHECK(report.verdicts[0].status == VerdictStatus::mismatch);

    // Correcting the erroneous tablet's figure also breaks its replay: the
    // slip no longer reproduces and the record claims an error that is gone.
    const auto corrected = sexag::parse_corpus(
        replace_once(pristine, "recorded: 1,27,30 bùr", "recorded: 1,23,20 bùr"));
    const CorpusReport corrected_report = sexag::verify_all(corrected);
    CHECK(!corrected_report.ok());
    CHECK(corrected_report.verdicts[3].status == VerdictStatus::mismatch);

    // A wrong granary residue is caught even when the head count matches.
    const auto repaid = sexag::parse_corpus(
        replace_once(pristine, "repaid: 3", "repaid: 4"));
    CHECK(sexag::verify_all(repaid).verdicts[1].status == VerdictStatus::mismatch);

    // A spelling that breaks the declared form is caught at parse time.
    CHECK_THROWS_AS(sexag::parse_corpus(replace_once(
                        pristine, "recorded: 20 líd-ga - 3 nigida",
                        "recorded: 19 líd-ga 1 nigida")),
                    sexag::parse_error);
}

TEST_CASE("an empty corpus verifies clean") {
    CHECK(sexag::parse_corpus("").empty());
    CHECK(sexag::parse_corpus("\n\n# only a comment\n\n").empty());
    const CorpusReport report = sexag::verify_all({});
    CHECK(report.ok());
    CHECK(report.verdicts.empty());
    CHECK(sexag::format_report(report) ==
          "0 records: 0 match, 0 error-reproduced, 0 mismatch\n");
    CHECK(sexag::format_report_machine(report).empty());
}

TEST_CASE("malformed corpus text fails with the offending line") {
    const auto line_of = [](const char* text) {
        try {
            sexag::parse_corpus(text);
        } catch (const sexag::parse_error& e) {
            return e.line();
        }
        return -1;
    };

    // Missing kind.
    CHECK(line_of("id: X\na: 1\nb: 2\nrecorded: 2\n") == 1);
    // Unknown kind.
    CHECK(line_of("id: X\nkind: div\n") == 2);
    // Bad digit in a literal.
    CHECK(line_of("id: X\nkind: mul\na: 1,61\nb: 2\nrecorded: 2\n") == 3);
    // Key without a colon.
    CHECK(line_of("id: X\nkind: mul\njunk\n") == 3);
    // A field foreign to the kind.
    CHECK(line_of("id: X\nkind: mul\na: 1\nb: 2\nrecorded: 2\nside: 5\n") == 6);
    // Duplicate field, reported at the second occurrence.
    CHECK(line_of("id: X\nkind: mul\na: 1\na: 2\nb: 2\nrecorded: 2\n") == 4);
    // An error model on a correct record.
    CHECK(sexag::parse_corpus("id: X\nkind: square-area\nside: 15\n"
                              "recorded: 2 iku 25 sar\n")
              .size() == 1);
    CHECK_THROWS_AS(
        sexag::parse_corpus("id: X\nkind: square-area\nside: 15\n"
                            "error-model: via-15-square\nrecorded: 2 iku 25 sar\n"),
        sexag::parse_error);
    CHECK_THROWS_AS(
        sexag::parse_corpus("id: X\nkind: mul\na: 1\nb: 2\nrecorded: 2\n"
                            "expect: scribal-error\n"),
        sexag::parse_error);
    // Declared form contradicting the spelling.
    CHECK_THROWS_AS(
        sexag::parse_corpus("id: X\nkind: donkey-ration\nheads: 11\nbig-unit: gur\n"
                            "recorded-form: subtractive\nrecorded: 2 gur 1 nigida\n"),
        sexag::parse_error);
    // Rows and a single side cannot mix.
    CHECK_THROWS_AS(
        sexag::parse_corpus("id: X\nkind: square-area\nside: 15\n"
                            "row: 1,0 = 2 bùr\nrecorded: 2 iku 25 sar\n"),
        sexag::parse_error);
    // A row without the equals sign.
    CHECK_THROWS_AS(sexag::parse_corpus("id: X\nkind: square-area\nrow: 1,0 2 bùr\n"),
                    sexag::parse_error);
    // Fractional heads.
    CHECK_THROWS_AS(
        sexag::parse_corpus("id: X\nkind: donkey-ration\nheads: 4;30\nbig-unit: gur\n"
                            "recorded: 1 gur\n"),
        sexag::parse_error);
    // A length system is no capacity.
    CHECK_THROWS_AS(
        sexag::parse_corpus("id: X\nkind: capacity-total\nsystem: length\nheads: 2\n"
                            "each: 1 ninda\nrecorded: 2 ninda\n"),
        sexag::parse_error);
}

TEST_CASE("a record built by hand verifies like the parsed one") {
    const std::string block =
        "id: WF-14\nkind: donkey-ration\nheads: 11\nbig-unit: líd-ga\n"
        "recorded: 2 líd-ga 3 nigida\n";
    const auto records = sexag::parse_corpus(block);
    REQUIRE(records.size() == 1);
    const Verdict v = sexag::verify_record(records[0]);
    CHECK(v.status == VerdictStatus::match);
    CHECK(v.computed ==
          sexag::donkey_ration(sexag::SexValue::parse("11"), sexag::BigUnit::lid_ga)
              .str());
}
