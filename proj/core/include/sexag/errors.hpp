#pragma once

#include <stdexcept>
#include <string>

namespace sexag {

/// Raised by the literal, numeral-phrase, quantity, expression, and corpus
/// parsers. Line and column are 1-based where known; 0 means "not tracked"
/// (single-line inputs report only a column).
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what, int line = 0, int column = 0)
        : std::runtime_error(what), line_(line), column_(column) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

}  // namespace sexag
