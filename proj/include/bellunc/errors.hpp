#pragma once

#include <stdexcept>
#include <string>

namespace bellunc {

// Bad caller input: malformed values, violated preconditions. Maps to CLI exit code 1.
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// An internal numeric self-check failed (closed-form mismatch, complex residue,
// property violation). Maps to CLI exit code 2.
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace bellunc
