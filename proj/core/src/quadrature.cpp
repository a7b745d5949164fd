#include "quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <string>

#include "kolkata/errors.hpp"
#include "number_format.hpp"

namespace kolkata::detail {

namespace {
constexpr double kShortInterval = 1e-4;
}  // namespace

double integrate(const std::function<double(double)>& f, double lo, double hi, double tol) {
  if (!(hi > lo)) return 0.0;
  // tanh-sinh copes with the unbounded derivatives the exponential and
  // Pareto curves have at p = 1.  The abscissa tables are built once per
  // thread.
  thread_local boost::math::quadrature::tanh_sinh<double> integrator(20);
  double error = 0.0;
  double l1 = 0.0;
  const auto integrand = [&f](double x) { return f(x); };
  const double value =
      hi - lo < kShortInterval
          ? boost::math::quadrature::gauss_kronrod<double, 15>::integrate(integrand, lo, hi, 0,
                                                                          tol, &error, &l1)
          : integrator.integrate(integrand, lo, hi, tol, &error, &l1);
  if (!std::isfinite(value) || error > tol) {
    throw QuadratureError("quadrature on [" + format_number(lo) + ", " + format_number(hi) +
                          "] stopped at error estimate " + format_number(error) +
                          " above tolerance " + format_number(tol));
  }
  return value;
}

}  // namespace kolkata::detail
