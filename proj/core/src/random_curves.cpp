#include "kolkata/random_curves.hpp"

#include <algorithm>
#include <numeric>

namespace kolkata {

PiecewiseLinearLorenz random_convex_curve(std::mt19937_64& rng, const RandomCurveOptions& options) {
  std::uniform_int_distribution<std::size_t> segment_count(1, std::max<std::size_t>(1, options.max_segments));
  std::exponential_distribution<double> positive(1.0);
  std::bernoulli_distribution zero_slope(options.zero_slope_probability);

  const std::size_t m = segment_count(rng);
  std::vector<double> widths(m);
  for (auto& w : widths) w = positive(rng) + 1e-3;
  const double width_total = std::accumulate(widths.begin(), widths.end(), 0.0);
  for (auto& w : widths) w /= width_total;

  std::vector<double> slopes(m);
  for (auto& s : slopes) s = zero_slope(rng) ? 0.0 : positive(rng);
  std::sort(slopes.begin(), slopes.end());
  if (slopes.back() == 0.0) slopes.back() = 1.0;
  double rise = 0.0;
  for (std::size_t i = 0; i < m; ++i) rise += widths[i] * slopes[i];
  for (auto& s : slopes) s /= rise;

  std::vector<Breakpoint> points{{0.0, 0.0}};
  double p = 0.0;
  double value = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    p += widths[i];
    value += widths[i] * slopes[i];
    points.push_back({p, value});
  }
  points.back() = {1.0, 1.0};
  for (auto& bp : points) bp.value = std::min(bp.value, bp.p);
  return PiecewiseLinearLorenz(std::move(points));
}

std::vector<double> random_incomes(std::mt19937_64& rng, std::size_t max_size) {
  std::uniform_int_distribution<std::size_t> size(1, std::max<std::size_t>(1, max_size));
  std::lognormal_distribution<double> income(0.0, 1.0);
  std::uniform_int_distribution<int> kind(0, 9);
  std::uniform_int_distribution<int> small_integer(1, 5);

  std::vector<double> xs(size(rng));
  for (auto& x : xs) {
    const int k = kind(rng);
    if (k == 0) {
      x = 0.0;
    } else if (k <= 3) {
      x = static_cast<double>(small_integer(rng));
    } else {
      x = income(rng);
    }
  }
  if (std::all_of(xs.begin(), xs.end(), [](double x) { return x == 0.0; })) xs.back() = 1.0;
  return xs;
}

}  // namespace kolkata
