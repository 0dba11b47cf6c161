#ifndef WARRANT_ERRORS_HPP
#define WARRANT_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace warrant {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed or inconsistent input (bad arity, unknown symbol, unbound
// variable, inconsistent literal set, ...).
class InputError : public Error {
public:
    explicit InputError(const std::string& msg) : Error(msg) {}
};

// Syntax error in an input file; carries a source location.
class ParseError : public Error {
public:
    ParseError(std::string file, int line, int col, const std::string& msg)
        : Error(file + ":" + std::to_string(line) + ":" + std::to_string(col) +
                ": " + msg),
          file_(std::move(file)), line_(line), col_(col) {}

    const std::string& file() const { return file_; }
    int line() const { return line_; }
    int col() const { return col_; }

private:
    std::string file_;
    int line_;
    int col_;
};

// Applying a ground action whose precondition does not hold.
class PreconditionViolation : public Error {
public:
    explicit PreconditionViolation(const std::string& msg) : Error(msg) {}
};

// An enumeration overran one of its resource budgets. The budget is named
// so callers can report which limit to raise.
class BudgetExceeded : public Error {
public:
    BudgetExceeded(std::string budget, std::uint64_t limit)
        : Error("budget '" + budget + "' exceeded (limit " +
                std::to_string(limit) + ")"),
          budget_(std::move(budget)), limit_(limit) {}

    const std::string& budget() const { return budget_; }
    std::uint64_t limit() const { return limit_; }

private:
    std::string budget_;
    std::uint64_t limit_;
};

} // namespace warrant

#endif
