#pragma once

#include <stdexcept>
#include <string>

namespace ns2d {

/// Invalid key, value, or constraint in a config file or flag.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Field dimensions or grids do not match.
struct SizeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Coefficients violate Hermitian symmetry beyond tolerance.
struct SymmetryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Input violates the mean-zero requirement.
struct MeanZeroError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A norm exceeded the blow-up threshold (or went NaN) during time stepping.
struct BlowupError : std::runtime_error {
    long long step;
    BlowupError(const std::string& what, long long step_index)
        : std::runtime_error(what), step(step_index) {}
};

/// A soak-mode invariant assertion failed.
struct InvariantViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A checkpoint or snapshot file is malformed or inconsistent.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace ns2d
