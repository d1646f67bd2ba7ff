#pragma once

#include <stdexcept>
#include <string>

namespace wreathlis {

/// Bad sizes, malformed inputs, or inputs violating a type invariant.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An exhaustive enumeration would exceed its configured element cap.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A mathematical identity or pathwise inequality failed to hold.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace wreathlis
