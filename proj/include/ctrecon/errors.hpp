#pragma once

#include <stdexcept>
#include <string>

namespace ctrecon {

/// Malformed configuration file or invalid parameter value.
class ConfigError : public std::runtime_error {
  public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Array shapes do not agree (volume vs. geometry, projections vs. detector, ...).
class DimensionError : public std::runtime_error {
  public:
    explicit DimensionError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A solver convergence constraint is violated (e.g. the TV weight bound of MLEM-TV).
class ConstraintError : public std::runtime_error {
  public:
    explicit ConstraintError(const std::string& msg) : std::runtime_error(msg) {}
};

/// File corruption, checksum mismatch or payload/header disagreement.
class IoError : public std::runtime_error {
  public:
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Raised by the iteration watchdog when the cost runs away.
class DivergenceError : public std::runtime_error {
  public:
    explicit DivergenceError(const std::string& msg) : std::runtime_error(msg) {}
};

// Process exit codes used by the CLI; one per error class.
namespace exit_code {
constexpr int ok = 0;
constexpr int internal = 1;
constexpr int usage = 2;
constexpr int config = 3;
constexpr int dimension = 4;
constexpr int constraint = 5;
constexpr int io = 6;
constexpr int divergence = 7;
} // namespace exit_code

} // namespace ctrecon
