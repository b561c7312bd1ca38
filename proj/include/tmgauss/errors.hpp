#pragma once

#include <stdexcept>
#include <string>

namespace tmg {

/// Diffusion coefficients violate the positivity constraints of the semigroup.
struct CoefficientError : std::domain_error {
  explicit CoefficientError(const std::string& what) : std::domain_error(what) {}
};

/// A covariance matrix fails the physicality requirements of a two-mode
/// Gaussian state (symmetry, positivity, smallest symplectic eigenvalue).
struct PhysicalityError : std::domain_error {
  explicit PhysicalityError(const std::string& what) : std::domain_error(what) {}
};

/// Output file could not be opened or written.
struct IoError : std::runtime_error {
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tmg
