#pragma once

#include <stdexcept>
#include <string>

namespace jnpoly {

/// Rejected input: a caller violated an operation's precondition.
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// Syntax error in the polynomial expression grammar.
class ParseError : public InputError {
public:
    ParseError(const std::string& what, int line, int column)
        : InputError(what + " at line " + std::to_string(line) + ", column " +
                     std::to_string(column)),
          line_(line),
          column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

/// A configured resource bound (tuple cap, enumeration arity) was exceeded.
class BoundError : public std::runtime_error {
public:
    explicit BoundError(const std::string& what) : std::runtime_error(what) {}
};

/// Exact integer arithmetic left the representable range.
class OverflowError : public std::runtime_error {
public:
    explicit OverflowError(const std::string& what) : std::runtime_error(what) {}
};

/// An internal invariant failed; signals an arithmetic or logic bug, not bad input.
class InvariantFault : public std::logic_error {
public:
    explicit InvariantFault(const std::string& what) : std::logic_error(what) {}
};

}  // namespace jnpoly
