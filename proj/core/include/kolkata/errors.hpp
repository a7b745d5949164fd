#pragma once

#include <stdexcept>
#include <string>

namespace kolkata {

/// A curve, sample or parameter set violates its domain constraints
/// (negative income, zero total, non-convex breakpoints, a > b, ...).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The fixed-point bracket [1/2, p*] did not contain a sign change.
/// Only an invalid curve can trigger this.
class BracketError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Adaptive quadrature exhausted its refinement budget before reaching
/// the requested absolute error.
class QuadratureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace kolkata
