#pragma once

#include <stdexcept>
#include <string>

namespace hmr {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class TypeError : public Error {
public:
    using Error::Error;
};

class UnboundVariable : public Error {
public:
    using Error::Error;
};

/// Raised when a step budget runs out. Strong normalization makes this a
/// kernel bug report rather than an expected outcome.
class BudgetExhausted : public Error {
public:
    BudgetExhausted(const std::string& what, std::string trace_tail)
        : Error(what), trace_tail_(std::move(trace_tail)) {}
    const std::string& trace_tail() const { return trace_tail_; }

private:
    std::string trace_tail_;
};

class ParseError : public Error {
public:
    ParseError(int line, int column, const std::string& message)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
          line_(line), column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

/// Invariant violations inside the kernel (e.g. a closed normal term that is
/// not a numeral). Never expected on valid input.
class InternalError : public Error {
public:
    using Error::Error;
};

} // namespace hmr
