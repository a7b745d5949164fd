#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "kolkata/lorenz.hpp"

namespace kolkata {

struct RandomCurveOptions {
  std::size_t max_segments = 12;
  /// Chance that a segment slope is zero (an income class that owns nothing).
  double zero_slope_probability = 0.1;
};

/// Random convex piecewise-linear Lorenz curve: random segment widths,
/// sorted non-negative slopes rescaled so the curve ends at (1, 1).
[[nodiscard]] PiecewiseLinearLorenz random_convex_curve(std::mt19937_64& rng,
                                                        const RandomCurveOptions& options = {});

/// 1..max_size incomes mixing log-normal draws, exact ties and zeros; at
/// least one income is positive.
[[nodiscard]] std::vector<double> random_incomes(std::mt19937_64& rng, std::size_t max_size = 50);

}  // namespace kolkata
