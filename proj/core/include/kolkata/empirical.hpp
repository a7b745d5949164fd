#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "kolkata/lorenz.hpp"

namespace kolkata {

/// Non-negative incomes, stored sorted ascending, with a positive total.
/// Construction throws ValidationError for empty input, negative or
/// non-finite incomes, or an all-zero sample.
class IncomeSample {
 public:
  explicit IncomeSample(std::vector<double> incomes);

  [[nodiscard]] std::span<const double> incomes() const noexcept { return incomes_; }
  [[nodiscard]] std::size_t size() const noexcept { return incomes_.size(); }
  [[nodiscard]] double total() const noexcept { return total_; }
  [[nodiscard]] double mean() const noexcept { return total_ / static_cast<double>(size()); }

 private:
  std::vector<double> incomes_;
  double total_ = 0.0;
};

/// Breakpoints (i/n, cumulative share of the i poorest), joined linearly.
[[nodiscard]] PiecewiseLinearLorenz lorenz_from_sample(const IncomeSample& sample);

/// Relative mean absolute difference sum_ij |x_i - x_j| / (2 n^2 mu),
/// evaluated in O(n) on the sorted sample.
[[nodiscard]] double discrete_gini(const IncomeSample& sample);

/// Relative mean deviation sum_i |x_i - mu| / (2 n mu).
[[nodiscard]] double discrete_pietra(const IncomeSample& sample);

}  // namespace kolkata
