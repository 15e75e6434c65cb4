#pragma once

#include <stdexcept>
#include <string>

namespace confspace {

/// A computation would exceed a configured size cap.
class SizeLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two poset elements are not comparable in the required direction.
class OrderError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A map or complex violates a structural requirement (not simplicial,
/// does not commute with a boundary, degree mismatch, ...).
class StructuralError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An argument lies outside the domain of an operation.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line, int column)
        : std::runtime_error("line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + what),
          line_(line), column_(column) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

} // namespace confspace
