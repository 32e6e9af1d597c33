#pragma once

#include <stdexcept>
#include <string>

namespace pwftap {

/// Malformed or invalid user input (market files, measure files, payoff
/// expressions). The CLI maps it to exit status 2.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Syntax error at a known location of an input document.
class ParseError : public InputError {
public:
    ParseError(const std::string& location, const std::string& what)
        : InputError(location + ": " + what), location_(location) {}

    const std::string& location() const noexcept { return location_; }

private:
    std::string location_;
};

/// Input that parses but violates a model invariant (e.g. empty omega).
class ValidationError : public InputError {
public:
    using InputError::InputError;
};

/// A caller broke an operation's precondition.
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// An internal certificate or invariant failed to re-verify. Never expected;
/// the CLI maps it to exit status 3.
class InvariantBreach : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace pwftap
