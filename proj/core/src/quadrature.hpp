#pragma once

#include <functional>

namespace kolkata::detail {

// Integral of f over [lo, hi] with absolute error <= tol; throws
// QuadratureError when the refinement budget runs out first.
double integrate(const std::function<double(double)>& f, double lo, double hi, double tol);

}  // namespace kolkata::detail
