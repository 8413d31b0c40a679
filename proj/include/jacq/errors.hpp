#pragma once

#include <stdexcept>
#include <string>

namespace jacq {

// Malformed user data: schema violations, dimension mismatches, broken
// preconditions on inputs.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A configured budget was exhausted (degree caps, coordinate caps, moment
// enumeration budgets).
class ResourceLimitError : public std::runtime_error {
public:
    explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

// A progress hook asked a long-running computation to stop.
class CancelledError : public std::runtime_error {
public:
    CancelledError() : std::runtime_error("cancelled by progress hook") {}
};

} // namespace jacq
