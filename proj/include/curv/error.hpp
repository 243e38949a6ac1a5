#pragma once

#include <stdexcept>
#include <string>

namespace curv {

enum class ErrorCode {
    index_out_of_range,
    self_loop,
    invalid_subset,
    param_out_of_range,
    unknown_name,
    overlapping_correspondence,
    parse_error,
    dimension_too_small,
    ambiguous_dimension,
    count_overflow,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

// Parse failures carry the 1-based position of the offending input.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, int line, int column = 0)
        : Error(ErrorCode::parse_error,
                "line " + std::to_string(line) +
                    (column > 0 ? ", col " + std::to_string(column) : "") + ": " + msg),
          line_(line),
          column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

}  // namespace curv
