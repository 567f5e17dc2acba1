#pragma once

#include <stdexcept>
#include <string>

namespace gpoct {

/// Raised when a run configuration cannot be parsed or validated.
/// The message names the offending section/key where possible.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised on numerical failure: NaN during propagation, non-convergence
/// of a stationary-state solve, singular deconvolution.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gpoct
