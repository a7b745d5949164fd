#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "kolkata/lorenz.hpp"

namespace kolkata {

/// Named test curves:
///   identity        L(p) = p
///   uniform01       uniform incomes on [0, 1], L(p) = p^2
///   exp1            exponential incomes, lambda = 1
///   pareto8020      Pareto incomes with alpha = ln 5 / ln 4 (k = 0.8)
///   circular        L(p) = 1 - sqrt(1 - p^2)
///   oligarchy:a     poorest a own nothing (a defaults to 0.5)
///   twopiece:K      coincidence family member (K defaults to 0.7)
///   lf1, lf2        two-segment curves with equal k, different Pietra
///   lf3, lf4        p^2, and p^2 with a straightened top quarter
///   lf10            circular arc up to 1/sqrt(2), then a chord to (1,1)
///   nonconvex       deliberately broken curve (fails validation)
///
/// Throws std::out_of_range for unknown names and ValidationError for
/// out-of-domain parameters.
[[nodiscard]] LorenzCurve preset(std::string_view name);

/// Every valid preset, with default parameters, in a fixed order.
[[nodiscard]] std::vector<std::string> preset_names();

}  // namespace kolkata
