#pragma once

#include <stdexcept>
#include <string>

namespace circforce {

/// Malformed textual input (graph expressions, edge lists, matrix files).
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, int line, int column)
        : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": "
                             + message),
          line_(line),
          column_(column)
    {
    }

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

/// The exact search refuses graphs (or components) larger than its configured ceiling.
class SearchCeilingExceeded : public std::runtime_error {
public:
    SearchCeilingExceeded(int order, int ceiling)
        : std::runtime_error("component of order " + std::to_string(order) + " exceeds the search ceiling of "
                             + std::to_string(ceiling) + " vertices"),
          order_(order),
          ceiling_(ceiling)
    {
    }

    int order() const noexcept { return order_; }
    int ceiling() const noexcept { return ceiling_; }

private:
    int order_;
    int ceiling_;
};

/// A time budget ran out before the search finished.
class BudgetExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A construction that should be correct by proof failed its own verification.
class InternalInconsistency : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace circforce
