#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "kolkata/errors.hpp"

namespace kolkata {

/// A vertex (p, L(p)) of a piecewise-linear Lorenz curve.
struct Breakpoint {
  double p = 0.0;
  double value = 0.0;

  friend bool operator==(const Breakpoint&, const Breakpoint&) = default;
};

/// Lorenz curve given by linear interpolation between breakpoints.
///
/// The checked constructor enforces every Lorenz axiom: the vertex list
/// starts at (0,0) and ends at (1,1), abscissae strictly increase, values
/// never decrease, segment slopes never decrease (convexity) and every
/// vertex lies on or below the diagonal.  `unchecked` only enforces the
/// shape needed to evaluate the function, so that `validate` can report
/// what is wrong with a malformed curve.
class PiecewiseLinearLorenz {
 public:
  explicit PiecewiseLinearLorenz(std::vector<Breakpoint> points);

  static PiecewiseLinearLorenz unchecked(std::vector<Breakpoint> points);

  [[nodiscard]] std::span<const Breakpoint> points() const noexcept { return points_; }
  [[nodiscard]] std::size_t segment_count() const noexcept { return points_.size() - 1; }
  /// Slope of segment i, joining points()[i] and points()[i + 1].
  [[nodiscard]] double slope(std::size_t segment) const;

  [[nodiscard]] double operator()(double p) const;
  /// inf{p : L(p) >= q}, solved exactly on the straddling segment.
  [[nodiscard]] double inverse(double q) const;

 private:
  struct NoChecks {};
  PiecewiseLinearLorenz(std::vector<Breakpoint> points, NoChecks);

  std::vector<Breakpoint> points_;
};

/// Lorenz curve of the uniform income distribution on [a, b].
struct Uniform {
  double a = 0.0;
  double b = 1.0;
};

/// Exponential incomes with rate lambda; the curve does not depend on lambda.
struct Exponential {
  double lambda = 1.0;
};

/// Pareto incomes with scale xm and shape alpha > 1.
struct Pareto {
  double xm = 1.0;
  double alpha = 2.0;
};

/// The poorest fraction a owns nothing; the rest share income equally.
struct Oligarchy {
  double a = 0.5;
};

/// Two segments meeting at (K, 1 - K); Gini, Pietra and normalized k
/// all equal 2K - 1 on this family.
struct TwoPieceK {
  double k = 0.5;
};

/// L(p) = 1 - sqrt(1 - p^2).
struct CircularQuadrant {};

/// One analytic piece of a `Segments` curve, valid on [previous end, end].
struct AnalyticPiece {
  double end = 1.0;
  std::function<double(double)> value;
};

/// Analytic curve stitched from pieces.  Pieces must agree in value at
/// every junction; slopes may jump.
struct Segments {
  std::string name = "segments";
  std::vector<AnalyticPiece> pieces;
};

using ParametricLorenz =
    std::variant<Uniform, Exponential, Pareto, Oligarchy, TwoPieceK, CircularQuadrant, Segments>;

enum class EvalCost { analytic, piecewise };

/// Immutable, cheaply copyable handle to a Lorenz curve L : [0,1] -> [0,1].
///
/// Curves built from a `PiecewiseLinearLorenz`, as well as the Oligarchy
/// and TwoPieceK families, keep their vertex list so that the index
/// computations can use exact segment algebra.  All other curves are
/// evaluated through closed forms and integrated numerically.
class LorenzCurve {
 public:
  LorenzCurve(PiecewiseLinearLorenz curve);  // NOLINT(google-explicit-constructor)
  LorenzCurve(ParametricLorenz spec);        // NOLINT(google-explicit-constructor)

  template <typename Family>
    requires std::is_constructible_v<ParametricLorenz, Family> &&
             (!std::is_same_v<std::decay_t<Family>, ParametricLorenz>)
  LorenzCurve(Family family)  // NOLINT(google-explicit-constructor)
      : LorenzCurve(ParametricLorenz(std::move(family))) {}

  /// The egalitarian curve L(p) = p.
  static LorenzCurve identity();

  [[nodiscard]] double operator()(double p) const;

  [[nodiscard]] EvalCost cost() const noexcept;
  /// Vertex representation, or nullptr for analytic curves.
  [[nodiscard]] const PiecewiseLinearLorenz* piecewise() const noexcept;
  /// Interior points where an analytic curve may fail to be smooth.
  [[nodiscard]] std::span<const double> kinks() const noexcept;
  [[nodiscard]] bool has_exact_inverse() const noexcept;
  /// Left-inverse in closed form, if the curve has one.
  [[nodiscard]] std::optional<double> exact_inverse(double q) const;
  /// Parametric family this curve was built from, if any.
  [[nodiscard]] const ParametricLorenz* parametric() const noexcept;

  /// Human-readable description that is also enough to rebuild a
  /// piecewise-linear curve (full-precision vertex list).
  [[nodiscard]] std::string describe() const;

 private:
  struct Impl;
  explicit LorenzCurve(std::shared_ptr<const Impl> impl);
  std::shared_ptr<const Impl> impl_;
};

// The operations below throw std::domain_error when a proportion
// argument lies outside [0, 1].

[[nodiscard]] double eval(const LorenzCurve& curve, double p);

/// 1 - L(p): income share of the richest 1 - p.
[[nodiscard]] double complementary(const LorenzCurve& curve, double p);

/// inf{p in [0,1] : L(p) >= q}.  Closed form where available, otherwise
/// bisection until |L(p) - q| <= 1e-12 or the bracket is narrower than
/// 1e-14.  The returned p always satisfies L(p) >= q (up to rounding of
/// closed forms).
[[nodiscard]] double inverse(const LorenzCurve& curve, double q);

/// Population fraction holding half of total income, L^{-1}(1/2).
[[nodiscard]] double p_star(const LorenzCurve& curve);

/// L^{-1}(1 - p), defined for p in [0, p_star].
[[nodiscard]] double r_of(const LorenzCurve& curve, double p);

/// Outcome of a grid check of the Lorenz axioms.  `violation` holds the
/// first offending grid triple (or pair/point, padded with NaN).
struct ValidationReport {
  bool passed = true;
  std::string reason;
  std::optional<std::array<double, 3>> violation;

  explicit operator bool() const noexcept { return passed; }
};

inline constexpr double kConvexitySlack = 1e-12;

/// Checks L(0) = 0, L(1) = 1, monotonicity, midpoint convexity on
/// consecutive grid triples and L(p) <= p on a uniform grid.  Curves
/// with a vertex list also have their segment slopes checked directly,
/// since a concave kink can fall between grid points.
[[nodiscard]] ValidationReport validate(const LorenzCurve& curve, std::size_t grid_size = 101);

/// Throws ValidationError carrying the report's reason if validation fails.
void require_valid(const LorenzCurve& curve, std::size_t grid_size = 101);

}  // namespace kolkata
