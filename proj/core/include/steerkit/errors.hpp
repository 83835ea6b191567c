#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace steerkit {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A parameter is outside its admissible range (gamma, eta, norms, orders...).
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

/// A matrix claimed to be a density matrix violates one or more invariants.
/// `violations()` lists one human-readable entry per failed invariant,
/// each with the measured residual.
class InvalidStateError : public Error {
public:
    InvalidStateError(const std::string& what, std::vector<std::string> violations)
        : Error(what), violations_(std::move(violations)) {}

    const std::vector<std::string>& violations() const { return violations_; }

private:
    std::vector<std::string> violations_;
};

/// The steering criterion was asked about a state with non-vanishing local
/// Bloch vectors; the verdict is only defined for T states.
class NotTStateError : public Error {
public:
    explicit NotTStateError(const std::string& what) : Error(what) {}
};

/// Malformed input file (state JSON, geometry JSON, config).
class FormatError : public Error {
public:
    explicit FormatError(const std::string& what) : Error(what) {}
};

} // namespace steerkit
