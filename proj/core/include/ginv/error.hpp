#pragma once

#include <stdexcept>
#include <string>

namespace ginv {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Inputs that violate an operation's preconditions (shape, backend, flags).
class InvalidArgument : public Error {
public:
    explicit InvalidArgument(const std::string& msg) : Error(msg) {}
};

class DimensionMismatch : public InvalidArgument {
public:
    explicit DimensionMismatch(const std::string& msg) : InvalidArgument(msg) {}
};

class DimensionTooLarge : public InvalidArgument {
public:
    explicit DimensionTooLarge(const std::string& msg) : InvalidArgument(msg) {}
};

// Matrix has no two-sided inverse.
class SingularError : public Error {
public:
    explicit SingularError(const std::string& msg) : Error(msg) {}
};

// 1 - ac is singular, so the explicit product-shift inverse does not exist.
class SingularAC : public SingularError {
public:
    explicit SingularAC(const std::string& msg) : SingularError(msg) {}
};

// Drazin index >= 2, no group inverse.
class NoGroupInverse : public Error {
public:
    explicit NoGroupInverse(const std::string& msg) : Error(msg) {}
};

// Float-mode iteration failed to settle (rank oscillation, root finding cap).
class NoConvergence : public Error {
public:
    explicit NoConvergence(const std::string& msg) : Error(msg) {}
};

// A transfer was invoked on a quadruple whose declared conditions fail.
class HypothesisViolated : public Error {
public:
    explicit HypothesisViolated(const std::string& msg) : Error(msg) {}
};

// Instance generator exhausted its attempt budget.
class GenerationFailed : public Error {
public:
    explicit GenerationFailed(const std::string& msg) : Error(msg) {}
};

class ZeroLambda : public InvalidArgument {
public:
    explicit ZeroLambda(const std::string& msg) : InvalidArgument(msg) {}
};

// Bad input files, bad JSON, unusable flags.
class IoError : public Error {
public:
    explicit IoError(const std::string& msg) : Error(msg) {}
};

}  // namespace ginv
