#pragma once

// Reference computations written without the library's algorithms:
// long-double closed forms, brute-force sums, composite Simpson
// quadrature and dense grid scans.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <numbers>
#include <span>
#include <vector>

namespace oracle {

using Fn = std::function<long double(long double)>;

inline long double uniform_lorenz(long double a, long double b, long double p) {
  const long double c = (b - a) / (b + a);
  return p * (1.0L - c * (1.0L - p));
}

inline long double exponential_lorenz(long double p) {
  if (p >= 1.0L) return 1.0L;
  return p + (1.0L - p) * std::log1p(-p);
}

inline long double pareto_lorenz(long double alpha, long double p) {
  return 1.0L - std::pow(1.0L - p, 1.0L - 1.0L / alpha);
}

inline long double circular_lorenz(long double p) {
  return 1.0L - std::sqrt((1.0L - p) * (1.0L + p));
}

/// Root of a continuous function with f(lo) < 0 < f(hi), by plain bisection.
inline long double bisect(const Fn& f, long double lo, long double hi, int iterations = 200) {
  for (int i = 0; i < iterations; ++i) {
    const long double mid = 0.5L * (lo + hi);
    (f(mid) < 0.0L ? lo : hi) = mid;
  }
  return 0.5L * (lo + hi);
}

/// Solves k + L(k) = 1 on [0, 1].
inline long double fixed_point(const Fn& lorenz) {
  return bisect([&](long double p) { return p + lorenz(p) - 1.0L; }, 0.0L, 1.0L);
}

/// Composite Simpson rule with `panels` (even) subintervals.
inline long double simpson(const Fn& f, long double lo, long double hi, std::size_t panels = 20000) {
  if (panels % 2 == 1) ++panels;
  const long double h = (hi - lo) / static_cast<long double>(panels);
  long double sum = f(lo) + f(hi);
  for (std::size_t i = 1; i < panels; ++i) {
    sum += (i % 2 == 1 ? 4.0L : 2.0L) * f(lo + h * static_cast<long double>(i));
  }
  return sum * h / 3.0L;
}

/// Maximum of p - L(p) over a uniform grid, with its first argmax.
struct GridMax {
  long double argmax = 0.0L;
  long double value = 0.0L;
};

inline GridMax scan_gap(const Fn& lorenz, std::size_t points = 200001) {
  GridMax best;
  for (std::size_t i = 0; i < points; ++i) {
    const long double p = static_cast<long double>(i) / static_cast<long double>(points - 1);
    const long double gap = p - lorenz(p);
    if (gap > best.value) best = {p, gap};
  }
  return best;
}

/// Mean absolute difference over all ordered pairs divided by twice the mean.
inline long double brute_force_gini(std::span<const double> x) {
  const auto n = static_cast<long double>(x.size());
  long double total = 0.0L;
  long double pairs = 0.0L;
  for (double xi : x) {
    total += xi;
    for (double xj : x) pairs += std::fabs(static_cast<long double>(xi) - xj);
  }
  const long double mean = total / n;
  return pairs / (2.0L * n * n * mean);
}

/// Share of total income that must move to equalize everyone.
inline long double brute_force_pietra(std::span<const double> x) {
  long double total = 0.0L;
  for (double xi : x) total += xi;
  const long double mean = total / static_cast<long double>(x.size());
  long double excess = 0.0L;
  for (double xi : x) excess += std::max(0.0L, static_cast<long double>(xi) - mean);
  return excess / total;
}

/// Piecewise-linear interpolation through the empirical Lorenz points.
inline long double empirical_lorenz(std::span<const double> x, long double p) {
  std::vector<double> sorted(x.begin(), x.end());
  std::sort(sorted.begin(), sorted.end());
  const auto n = static_cast<long double>(sorted.size());
  std::vector<long double> cumulative{0.0L};
  for (double v : sorted) cumulative.push_back(cumulative.back() + v);
  const long double position = p * n;
  const auto i = std::min(static_cast<std::size_t>(position), sorted.size() - 1);
  const long double frac = position - static_cast<long double>(i);
  return (cumulative[i] + frac * sorted[i]) / cumulative.back();
}

inline const long double kGolden = (std::sqrt(5.0L) - 1.0L) / 2.0L;
inline const long double kParetoAlpha = std::log(5.0L) / std::log(4.0L);

}  // namespace oracle
