#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace dinv {

// Every failure the library reports deliberately carries a short machine
// readable kind. The CLI prints "error\t<kind>\t<message>" and exits 1.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(message), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

// Division by zero, zero modulus, invalid torus knot parameters and the like.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& message) : Error("domain", message) {}
};

// gcd(a, m) != 1 in modular inversion.
class NotInvertibleError : public Error {
public:
    explicit NotInvertibleError(const std::string& message) : Error("not-invertible", message) {}
};

// Bad user-supplied text (CLI arguments, cached lines, combination strings).
class ParseError : public Error {
public:
    explicit ParseError(const std::string& message) : Error("parse", message) {}
};

// A documented mathematical precondition does not hold (slope too small, ...).
class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& message) : Error("precondition", message) {}
};

// Refusing to start a computation that exceeds a guardrail.
class TooLargeError : public Error {
public:
    explicit TooLargeError(const std::string& message) : Error("too-large", message) {}
};

// A bounded search ended without a verdict either way.
class InconclusiveError : public Error {
public:
    explicit InconclusiveError(const std::string& message) : Error("inconclusive", message) {}
};

// An internal cross-check failed. Seeing this means a bug, not bad input.
class InternalError : public Error {
public:
    explicit InternalError(const std::string& message) : Error("internal", message) {}
};

} // namespace dinv
