#pragma once

#include <stdexcept>
#include <string>

namespace eqhilb {

/// Which hypothesis of an operation was violated.
enum class Hypothesis {
    InvalidArgument,
    NotCoprimeWeights,   // gcd(a, b) != 1
    NonPositiveOrder,    // n < 1
    WrongSign,           // sign of a*b unsuitable for the operation
    ThresholdNotMet,     // n <= r*a*b
    Unbalanced,          // partition is not balanced for the group
    NotACore,            // partition is not an n-core
    InsufficientSamples,
};

class PreconditionError : public std::invalid_argument {
public:
    PreconditionError(Hypothesis h, const std::string& what)
        : std::invalid_argument(what), hypothesis_(h) {}

    Hypothesis hypothesis() const noexcept { return hypothesis_; }

private:
    Hypothesis hypothesis_;
};

/// An internal consistency check failed. Never repaired silently.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Enumeration would exceed the configured box ceiling.
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace eqhilb
