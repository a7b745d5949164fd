#include "kolkata/empirical.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace kolkata {

IncomeSample::IncomeSample(std::vector<double> incomes) : incomes_(std::move(incomes)) {
  if (incomes_.empty()) throw ValidationError("income sample is empty");
  for (std::size_t i = 0; i < incomes_.size(); ++i) {
    const double x = incomes_[i];
    if (!std::isfinite(x)) {
      throw ValidationError("income #" + std::to_string(i + 1) + " is not finite");
    }
    if (x < 0.0) throw ValidationError("income #" + std::to_string(i + 1) + " is negative");
  }
  std::sort(incomes_.begin(), incomes_.end());
  // Ascending summation keeps the total's rounding error small.
  for (double x : incomes_) total_ += x;
  if (!(total_ > 0.0)) throw ValidationError("income sample has zero total (mean income is 0)");
}

PiecewiseLinearLorenz lorenz_from_sample(const IncomeSample& sample) {
  const auto xs = sample.incomes();
  const auto n = static_cast<double>(xs.size());
  std::vector<Breakpoint> points;
  points.reserve(xs.size() + 1);
  points.push_back({0.0, 0.0});
  double cumulative = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    cumulative += xs[i];
    points.push_back({static_cast<double>(i + 1) / n, cumulative / sample.total()});
  }
  points.back().value = 1.0;
  return PiecewiseLinearLorenz(std::move(points));
}

double discrete_gini(const IncomeSample& sample) {
  // For sorted x, sum_{i,j} |x_i - x_j| = 2 sum_i (2i - n + 1) x_i (0-based i).
  const auto xs = sample.incomes();
  const auto n = static_cast<double>(xs.size());
  double weighted = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    weighted += (2.0 * static_cast<double>(i) - n + 1.0) * xs[i];
  }
  return 2.0 * weighted / (2.0 * n * n * sample.mean());
}

double discrete_pietra(const IncomeSample& sample) {
  const double mu = sample.mean();
  double deviation = 0.0;
  for (double x : sample.incomes()) deviation += std::abs(x - mu);
  return deviation / (2.0 * static_cast<double>(sample.size()) * mu);
}

}  // namespace kolkata
