#pragma once

#include <cstddef>
#include <vector>

#include "kolkata/lorenz.hpp"

namespace kolkata {

inline constexpr double kDefaultTolerance = 1e-10;

/// Summary of one curve.  `n` and `mean` describe the income sample the
/// curve came from; they are left at 0 for curves without one.
struct IndexReport {
  double k = 0.5;
  double normalized_k = 0.0;
  double gini = 0.0;
  double pietra = 0.0;
  double pietra_argmax = 0.0;
  double p_star = 0.5;
  double pareto_ratio = 1.0;
  std::size_t n = 0;
  double mean = 0.0;
  double root_tolerance = kDefaultTolerance;
  double quadrature_tolerance = kDefaultTolerance;
};

/// Kolkata index: the unique k in [1/2, p*] with k + L(k) = 1.
///
/// Piecewise-linear curves are solved exactly on the segment where
/// Z(p) = 1 - L(p) - p changes sign.  Analytic curves are bisected on
/// [1/2, p*] until |Z(k)| <= tol; since Z' <= -1 the returned k is then
/// also within tol of the root.  Throws BracketError if Z does not change
/// sign on the bracket, which only happens for invalid curves.
[[nodiscard]] double k_index(const LorenzCurve& curve, double tol = kDefaultTolerance);

/// 2k - 1.
[[nodiscard]] double normalized_k(const LorenzCurve& curve, double tol = kDefaultTolerance);

/// Integral of L over [lo, hi]: exact for piecewise-linear curves,
/// tanh-sinh quadrature split at kinks otherwise.
[[nodiscard]] double lorenz_integral(const LorenzCurve& curve, double lo, double hi,
                                     double tol = kDefaultTolerance);

/// 2 * integral of (p - L(p)) over [0, 1].
[[nodiscard]] double gini(const LorenzCurve& curve, double tol = kDefaultTolerance);

struct PietraResult {
  double argmax = 0.0;  ///< population share with income at the mean
  double value = 0.0;   ///< max over p of p - L(p)
};

/// Maximizes the concave gap p - L(p).  Vertex scan for piecewise-linear
/// curves; golden-section search (per smooth piece) to bracket width
/// <= tol for analytic ones.  Ties go to the smallest p.
[[nodiscard]] PietraResult pietra(const LorenzCurve& curve, double tol = kDefaultTolerance);

/// Across-group disparity (p - L(p)) / 2.
[[nodiscard]] double disparity(const LorenzCurve& curve, double p);

struct DisparitySample {
  double p = 0.0;
  double d = 0.0;
};
using DisparityProfile = std::vector<DisparitySample>;

/// Disparity on a uniform grid of `points` >= 2 proportions.
[[nodiscard]] DisparityProfile disparity_profile(const LorenzCurve& curve, std::size_t points);

/// k / (1 - k): the generalized "80/20" split.
[[nodiscard]] double pareto_ratio(const LorenzCurve& curve, double tol = kDefaultTolerance);

struct BoundaryDistances {
  double poor = 0.0;  ///< distance of (p, L(p)) from (0, 0)
  double rich = 0.0;  ///< distance of (p, L(p)) from (1, 1)
};

[[nodiscard]] BoundaryDistances boundary_distances(const LorenzCurve& curve, double p);

/// Integral over [0, P] of (1 - L(t) - t); maximized at P = k.
[[nodiscard]] double surplus(const LorenzCurve& curve, double upper, double tol = kDefaultTolerance);

/// Integral over [P, 1] of ((1 - t) - L(t)); minimized at P = k.
[[nodiscard]] double deficit(const LorenzCurve& curve, double lower, double tol = kDefaultTolerance);

struct DivisionInterval {
  double lo = 0.0;
  double hi = 1.0;

  [[nodiscard]] bool contains(double x, double slack = 0.0) const noexcept {
    return x >= lo - slack && x <= hi + slack;
  }
  [[nodiscard]] double width() const noexcept { return hi - lo; }
};

/// [min(p, r(p)), max(p, r(p))] with r(p) = L^{-1}(1 - p); needs p <= p*.
[[nodiscard]] DivisionInterval interval_set(const LorenzCurve& curve, double p);

/// Validates the curve (101-point grid) and computes every index.
/// Throws ValidationError for curves failing validation.
[[nodiscard]] IndexReport index_report(const LorenzCurve& curve, double tol = kDefaultTolerance);

}  // namespace kolkata
