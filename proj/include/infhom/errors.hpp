#pragma once

#include <stdexcept>
#include <string>

namespace infhom {

/// Malformed input: bad labels, wrong degrees, inconsistent sizes.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An algebraic axiom fails; `witness` names the offending inputs.
class AxiomViolation : public std::runtime_error {
public:
    AxiomViolation(const std::string& what, std::string witness)
        : std::runtime_error(what + ": " + witness), witness_(std::move(witness)) {}
    const std::string& witness() const { return witness_; }

private:
    std::string witness_;
};

/// A computation needs words beyond the configured weight/degree cap.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A block grew past the resource budget.
class ResourceExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace infhom
