#pragma once

#include <stdexcept>
#include <string>

namespace moncat {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Boundary mismatch when building or combining diagrams/maps/strategies.
struct TypeMismatchError : Error {
    explicit TypeMismatchError(const std::string& what) : Error(what) {}
};

// Malformed textual input (expressions, theory files, proofs, JSON payloads).
struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

// A natural-number computation left the representable range.
struct ArithmeticOverflowError : Error {
    explicit ArithmeticOverflowError(const std::string& what) : Error(what) {}
};

// Interaction of two strategies deadlocked (a causal cycle through the
// shared boundary), so the composite is undefined.
struct CycleDetectedError : Error {
    explicit CycleDetectedError(const std::string& what) : Error(what) {}
};

// A strategy violates polarization or is incompatible with its arena order.
struct InvalidStrategyError : Error {
    explicit InvalidStrategyError(const std::string& what) : Error(what) {}
};

// A proof fails a rule premise or a side condition.
struct ProofError : Error {
    explicit ProofError(const std::string& what) : Error(what) {}
};

// A value was handed to an evaluator or decision procedure outside its domain.
struct DomainError : Error {
    explicit DomainError(const std::string& what) : Error(what) {}
};

} // namespace moncat
