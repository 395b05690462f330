#pragma once

#include <stdexcept>
#include <string>

namespace rsw {

// Raised when an operation requires a regular system of weights and the
// argument is not regular.  "Not regular" as a query result is a value
// (empty optional), never this exception.
class NotRegularError : public std::runtime_error {
public:
    explicit NotRegularError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an operation requires a weight system of dual type.
class NotDualTypeError : public std::runtime_error {
public:
    explicit NotDualTypeError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a verified internal identity fails.  These identities hold for
// every valid input, so seeing this exception means either corrupted input
// data or a genuine defect worth reporting, never a normal result.
class StructuralError : public std::runtime_error {
public:
    explicit StructuralError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when two-variable Laurent data with different exponent units or
// coefficient fields are combined.
class UnitMismatchError : public std::invalid_argument {
public:
    explicit UnitMismatchError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace rsw
