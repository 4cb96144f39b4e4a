#pragma once

#include <stdexcept>
#include <string>

namespace topo {

/// Invalid user-supplied parameter or out-of-contract argument.
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The constrained linear system could not be solved to the required residual.
class SolveError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A numerical procedure failed (reported, never silently clamped).
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Corrupt, truncated or version-mismatched file content.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace topo
