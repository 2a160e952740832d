// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 fx contributors

#pragma once

#include <stdexcept>
#include <string>

namespace fx {

// Parse failure with a 1-based source position. what() carries
// "<kind> at <line>:<col>: <detail>".
class ParseError : public std::runtime_error {
public:
    ParseError(std::string kind, int line, int col, const std::string& detail)
        : std::runtime_error(kind + " at " + std::to_string(line) + ":" +
                             std::to_string(col) + ": " + detail),
          kind_(std::move(kind)),
          line_(line),
          col_(col) {}

    const std::string& kind() const { return kind_; }
    int line() const { return line_; }
    int col() const { return col_; }

private:
    std::string kind_;
    int line_;
    int col_;
};

struct SyntaxError : ParseError {
    SyntaxError(int line, int col, const std::string& detail)
        : ParseError("syntax-error", line, col, detail) {}
};

struct UnknownPrefixError : ParseError {
    UnknownPrefixError(int line, int col, const std::string& prefix)
        : ParseError("unknown-prefix", line, col, "undeclared prefix \"" + prefix + "\"") {}
};

struct UnterminatedLiteralError : ParseError {
    UnterminatedLiteralError(int line, int col)
        : ParseError("unterminated-literal", line, col, "string literal never closes") {}
};

// Query evaluation failure (e.g. contains/regex over a non-literal binding).
struct EvalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace fx
