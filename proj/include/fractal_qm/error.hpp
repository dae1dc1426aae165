#pragma once

#include <stdexcept>
#include <string>

namespace fractal_qm {

/// Raised when an argument violates an operation's preconditions.
class ParameterError : public std::invalid_argument {
public:
    explicit ParameterError(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when a well-posed evaluation cannot produce a finite answer.
class ComputationError : public std::runtime_error {
public:
    explicit ComputationError(const std::string& what) : std::runtime_error(what) {}
};

/// The staircase is flat around the evaluation point, so the F^alpha-derivative
/// falls on its "zero otherwise" branch.
class DerivativeUndefined : public ComputationError {
public:
    explicit DerivativeUndefined(const std::string& what) : ComputationError(what) {}
};

namespace detail {

inline void require(bool condition, const char* message) {
    if (!condition) throw ParameterError(message);
}

}  // namespace detail
}  // namespace fractal_qm
