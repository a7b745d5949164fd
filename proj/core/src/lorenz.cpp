#include "kolkata/lorenz.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "number_format.hpp"

namespace kolkata {

namespace {

constexpr double kEndpointTolerance = 1e-12;
constexpr double kJunctionTolerance = 1e-12;
constexpr double kInverseValueTolerance = 1e-12;
constexpr double kInverseWidthTolerance = 1e-14;

void require_fraction(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::domain_error(std::string(what) + " must lie in [0, 1], got " +
                            detail::format_number(p));
  }
}

bool slopes_convex(double left, double right) {
  return right >= left - 1e-9 * std::max(1.0, std::abs(left));
}

// Slopes of a breakpoint list; zero-width segments cannot occur because
// abscissae strictly increase.
double segment_slope(const Breakpoint& lo, const Breakpoint& hi) {
  return (hi.value - lo.value) / (hi.p - lo.p);
}

void require_shape(const std::vector<Breakpoint>& points) {
  if (points.size() < 2) {
    throw ValidationError("piecewise-linear Lorenz curve needs at least two breakpoints");
  }
  for (const auto& bp : points) {
    if (!std::isfinite(bp.p) || !std::isfinite(bp.value)) {
      throw ValidationError("breakpoints must be finite");
    }
  }
  if (points.front().p != 0.0 || points.back().p != 1.0) {
    throw ValidationError("breakpoint abscissae must start at 0 and end at 1");
  }
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (!(points[i].p > points[i - 1].p)) {
      throw ValidationError("breakpoint abscissae must strictly increase (index " +
                            std::to_string(i) + ")");
    }
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// PiecewiseLinearLorenz

PiecewiseLinearLorenz::PiecewiseLinearLorenz(std::vector<Breakpoint> points, NoChecks)
    : points_(std::move(points)) {}

PiecewiseLinearLorenz PiecewiseLinearLorenz::unchecked(std::vector<Breakpoint> points) {
  require_shape(points);
  return PiecewiseLinearLorenz(std::move(points), NoChecks{});
}

PiecewiseLinearLorenz::PiecewiseLinearLorenz(std::vector<Breakpoint> points) {
  require_shape(points);
  if (std::abs(points.front().value) > kEndpointTolerance ||
      std::abs(points.back().value - 1.0) > kEndpointTolerance) {
    throw ValidationError("piecewise-linear Lorenz curve must run from (0,0) to (1,1)");
  }
  points.front().value = 0.0;
  points.back().value = 1.0;
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (points[i].value < points[i - 1].value) {
      throw ValidationError("breakpoint values must not decrease (index " + std::to_string(i) +
                            ")");
    }
    if (points[i].value > points[i].p + kConvexitySlack) {
      throw ValidationError("breakpoint lies above the diagonal (index " + std::to_string(i) +
                            ")");
    }
  }
  for (std::size_t i = 2; i < points.size(); ++i) {
    if (!slopes_convex(segment_slope(points[i - 2], points[i - 1]),
                       segment_slope(points[i - 1], points[i]))) {
      throw ValidationError("segment slopes decrease at breakpoint " + std::to_string(i - 1) +
                            " (curve is not convex)");
    }
  }
  points_ = std::move(points);
}

double PiecewiseLinearLorenz::slope(std::size_t segment) const {
  if (segment >= segment_count()) throw std::out_of_range("segment index out of range");
  return segment_slope(points_[segment], points_[segment + 1]);
}

double PiecewiseLinearLorenz::operator()(double p) const {
  require_fraction(p, "p");
  const auto upper = std::upper_bound(points_.begin(), points_.end(), p,
                                      [](double x, const Breakpoint& bp) { return x < bp.p; });
  if (upper == points_.end()) return points_.back().value;
  const auto& lo = *(upper - 1);
  const auto& hi = *upper;
  if (p == lo.p) return lo.value;
  const double t = (p - lo.p) / (hi.p - lo.p);
  return lo.value + t * (hi.value - lo.value);
}

double PiecewiseLinearLorenz::inverse(double q) const {
  require_fraction(q, "q");
  if (q <= points_.front().value) return 0.0;
  const auto hit = std::lower_bound(points_.begin(), points_.end(), q,
                                    [](const Breakpoint& bp, double x) { return bp.value < x; });
  if (hit == points_.end()) return 1.0;
  if (hit->value == q) {
    // The segment ending here rises strictly (its left vertex is below q),
    // so the vertex itself is the leftmost preimage.
    return hit->p;
  }
  const auto& lo = *(hit - 1);
  const auto& hi = *hit;
  const double p = lo.p + (q - lo.value) * (hi.p - lo.p) / (hi.value - lo.value);
  return std::clamp(p, lo.p, hi.p);
}

// ---------------------------------------------------------------------------
// LorenzCurve

struct LorenzCurve::Impl {
  EvalCost cost = EvalCost::analytic;
  std::optional<PiecewiseLinearLorenz> vertices;
  std::function<double(double)> eval;
  std::function<double(double)> inverse;
  std::vector<double> kinks;
  std::optional<ParametricLorenz> spec;
  std::string description;
};

LorenzCurve::LorenzCurve(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

namespace {

std::string describe_vertices(const PiecewiseLinearLorenz& curve) {
  std::ostringstream out;
  out << "piecewise[";
  bool first = true;
  for (const auto& bp : curve.points()) {
    if (!first) out << ';';
    first = false;
    out << '(' << detail::format_number(bp.p) << ',' << detail::format_number(bp.value) << ')';
  }
  out << ']';
  return out.str();
}

bool finite(double x) { return std::isfinite(x); }

}  // namespace

LorenzCurve::LorenzCurve(PiecewiseLinearLorenz curve) {
  auto impl = std::make_shared<Impl>();
  impl->cost = EvalCost::piecewise;
  impl->description = describe_vertices(curve);
  impl->vertices = std::move(curve);
  impl_ = std::move(impl);
}

LorenzCurve::LorenzCurve(ParametricLorenz spec) {
  auto impl = std::make_shared<Impl>();
  std::visit(
      [&impl](const auto& family) {
        using T = std::decay_t<decltype(family)>;
        if constexpr (std::is_same_v<T, Uniform>) {
          if (!finite(family.a) || !finite(family.b) || family.a < 0.0 || !(family.b > family.a)) {
            throw ValidationError("uniform distribution needs 0 <= a < b");
          }
          // L(p) = p (1 - c (1 - p)) with c = (b - a) / (b + a).
          const double c = (family.b - family.a) / (family.b + family.a);
          impl->eval = [c](double p) { return p * (1.0 - c * (1.0 - p)); };
          impl->inverse = [c](double q) {
            // Root of c p^2 + (1 - c) p - q = 0, in the cancellation-free form.
            const double lin = 1.0 - c;
            return 2.0 * q / (lin + std::sqrt(lin * lin + 4.0 * c * q));
          };
          impl->description = "uniform(a=" + detail::format_number(family.a) +
                              ", b=" + detail::format_number(family.b) + ")";
        } else if constexpr (std::is_same_v<T, Exponential>) {
          if (!finite(family.lambda) || !(family.lambda > 0.0)) {
            throw ValidationError("exponential distribution needs lambda > 0");
          }
          impl->eval = [](double p) { return p + (1.0 - p) * std::log1p(-p); };
          impl->description = "exponential(lambda=" + detail::format_number(family.lambda) + ")";
        } else if constexpr (std::is_same_v<T, Pareto>) {
          if (!finite(family.xm) || !finite(family.alpha) || !(family.xm > 0.0) ||
              !(family.alpha > 1.0)) {
            throw ValidationError("Pareto distribution needs xm > 0 and alpha > 1");
          }
          const double exponent = 1.0 - 1.0 / family.alpha;
          impl->eval = [exponent](double p) { return 1.0 - std::pow(1.0 - p, exponent); };
          impl->inverse = [exponent](double q) {
            return 1.0 - std::pow(1.0 - q, 1.0 / exponent);
          };
          impl->description = "pareto(xm=" + detail::format_number(family.xm) +
                              ", alpha=" + detail::format_number(family.alpha) + ")";
        } else if constexpr (std::is_same_v<T, Oligarchy>) {
          if (!finite(family.a) || !(family.a > 0.0 && family.a < 1.0)) {
            throw ValidationError("oligarchy needs a in (0, 1)");
          }
          impl->cost = EvalCost::piecewise;
          impl->vertices = PiecewiseLinearLorenz({{0.0, 0.0}, {family.a, 0.0}, {1.0, 1.0}});
          impl->description = "oligarchy(a=" + detail::format_number(family.a) + ")";
        } else if constexpr (std::is_same_v<T, TwoPieceK>) {
          if (!finite(family.k) || !(family.k >= 0.5 && family.k < 1.0)) {
            throw ValidationError("two-piece coincidence curve needs K in [1/2, 1)");
          }
          impl->cost = EvalCost::piecewise;
          impl->vertices =
              PiecewiseLinearLorenz({{0.0, 0.0}, {family.k, 1.0 - family.k}, {1.0, 1.0}});
          impl->description = "twopiece(K=" + detail::format_number(family.k) + ")";
        } else if constexpr (std::is_same_v<T, CircularQuadrant>) {
          impl->eval = [](double p) { return 1.0 - std::sqrt((1.0 - p) * (1.0 + p)); };
          impl->inverse = [](double q) { return std::sqrt(q * (2.0 - q)); };
          impl->description = "circular";
        } else if constexpr (std::is_same_v<T, Segments>) {
          const auto& pieces = family.pieces;
          if (pieces.empty()) throw ValidationError("segment curve needs at least one piece");
          double start = 0.0;
          for (std::size_t i = 0; i < pieces.size(); ++i) {
            if (!pieces[i].value) throw ValidationError("segment piece has no evaluation rule");
            if (!(pieces[i].end > start) || pieces[i].end > 1.0) {
              throw ValidationError("segment ends must strictly increase within (0, 1]");
            }
            if (i > 0) {
              const double gap = pieces[i - 1].value(start) - pieces[i].value(start);
              if (!(std::abs(gap) <= kJunctionTolerance)) {
                throw ValidationError("segment pieces disagree at junction p=" +
                                      detail::format_number(start));
              }
              impl->kinks.push_back(start);
            }
            start = pieces[i].end;
          }
          if (pieces.back().end != 1.0) throw ValidationError("last segment must end at p = 1");
          if (!(std::abs(pieces.front().value(0.0)) <= kEndpointTolerance) ||
              !(std::abs(pieces.back().value(1.0) - 1.0) <= kEndpointTolerance)) {
            throw ValidationError("segment curve must run from (0,0) to (1,1)");
          }
          impl->eval = [pieces](double p) {
            for (const auto& piece : pieces) {
              if (p <= piece.end) return piece.value(p);
            }
            return pieces.back().value(p);
          };
          impl->description = family.name;
        }
      },
      spec);
  impl->spec = std::move(spec);
  impl_ = std::move(impl);
}

LorenzCurve LorenzCurve::identity() {
  auto impl = std::make_shared<Impl>();
  impl->cost = EvalCost::piecewise;
  impl->vertices = PiecewiseLinearLorenz({{0.0, 0.0}, {1.0, 1.0}});
  impl->description = "identity";
  return LorenzCurve(std::shared_ptr<const Impl>(std::move(impl)));
}

double LorenzCurve::operator()(double p) const {
  require_fraction(p, "p");
  if (impl_->vertices) return (*impl_->vertices)(p);
  if (p == 0.0) return 0.0;
  if (p == 1.0) return 1.0;
  return impl_->eval(p);
}

EvalCost LorenzCurve::cost() const noexcept { return impl_->cost; }

const PiecewiseLinearLorenz* LorenzCurve::piecewise() const noexcept {
  return impl_->vertices ? &*impl_->vertices : nullptr;
}

std::span<const double> LorenzCurve::kinks() const noexcept { return impl_->kinks; }

bool LorenzCurve::has_exact_inverse() const noexcept {
  return impl_->vertices.has_value() || static_cast<bool>(impl_->inverse);
}

std::optional<double> LorenzCurve::exact_inverse(double q) const {
  require_fraction(q, "q");
  if (impl_->vertices) return impl_->vertices->inverse(q);
  if (!impl_->inverse) return std::nullopt;
  if (q == 0.0) return 0.0;
  if (q == 1.0) return 1.0;
  return std::clamp(impl_->inverse(q), 0.0, 1.0);
}

const ParametricLorenz* LorenzCurve::parametric() const noexcept {
  return impl_->spec ? &*impl_->spec : nullptr;
}

std::string LorenzCurve::describe() const { return impl_->description; }

// ---------------------------------------------------------------------------
// Free operations

double eval(const LorenzCurve& curve, double p) { return curve(p); }

double complementary(const LorenzCurve& curve, double p) { return 1.0 - curve(p); }

double inverse(const LorenzCurve& curve, double q) {
  require_fraction(q, "q");
  if (auto exact = curve.exact_inverse(q)) return *exact;
  if (q == 0.0) return 0.0;
  if (q == 1.0) return 1.0;
  // Invariant: L(lo) < q <= L(hi).
  double lo = 0.0;
  double hi = 1.0;
  while (hi - lo > kInverseWidthTolerance) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double value = curve(mid);
    if (value >= q) {
      hi = mid;
      if (value - q <= kInverseValueTolerance) break;
    } else {
      lo = mid;
    }
  }
  return hi;
}

double p_star(const LorenzCurve& curve) { return inverse(curve, 0.5); }

double r_of(const LorenzCurve& curve, double p) {
  require_fraction(p, "p");
  if (p > p_star(curve) + 1e-12) {
    throw std::domain_error("r_of needs p <= p_star, got " + detail::format_number(p));
  }
  return inverse(curve, 1.0 - p);
}

ValidationReport validate(const LorenzCurve& curve, std::size_t grid_size) {
  if (grid_size < 3) throw std::invalid_argument("validation grid needs at least 3 points");
  const auto nan = std::numeric_limits<double>::quiet_NaN();
  auto fail = [](std::string reason, std::array<double, 3> where) {
    return ValidationReport{false, std::move(reason), where};
  };

  if (const auto* pl = curve.piecewise()) {
    const auto pts = pl->points();
    if (pts.front().value != 0.0 || pts.back().value != 1.0) {
      return fail("curve must satisfy L(0) = 0 and L(1) = 1", {0.0, 1.0, nan});
    }
    for (std::size_t i = 1; i < pts.size(); ++i) {
      if (pts[i].value < pts[i - 1].value) {
        return fail("breakpoint values decrease", {pts[i - 1].p, pts[i].p, nan});
      }
      if (pts[i].value > pts[i].p + kConvexitySlack) {
        return fail("breakpoint lies above the diagonal", {pts[i].p, nan, nan});
      }
    }
    for (std::size_t i = 2; i < pts.size(); ++i) {
      if (!slopes_convex(pl->slope(i - 2), pl->slope(i - 1))) {
        return fail("segment slopes decrease (not convex)", {pts[i - 2].p, pts[i - 1].p, pts[i].p});
      }
    }
  }

  const auto last = static_cast<double>(grid_size - 1);
  std::vector<double> grid(grid_size);
  std::vector<double> values(grid_size);
  for (std::size_t i = 0; i < grid_size; ++i) {
    grid[i] = static_cast<double>(i) / last;
    values[i] = curve(grid[i]);
    if (!std::isfinite(values[i])) {
      return fail("curve value is not finite", {grid[i], nan, nan});
    }
  }
  if (values.front() != 0.0) return fail("L(0) must equal 0", {0.0, nan, nan});
  if (values.back() != 1.0) return fail("L(1) must equal 1", {1.0, nan, nan});
  for (std::size_t i = 0; i < grid_size; ++i) {
    if (values[i] > grid[i] + kConvexitySlack) {
      return fail("L(p) exceeds p", {grid[i], nan, nan});
    }
    if (i > 0 && values[i] < values[i - 1] - kConvexitySlack) {
      return fail("L is decreasing", {grid[i - 1], grid[i], nan});
    }
    if (i > 0 && i + 1 < grid_size &&
        values[i] > 0.5 * (values[i - 1] + values[i + 1]) + kConvexitySlack) {
      return fail("midpoint convexity violated", {grid[i - 1], grid[i], grid[i + 1]});
    }
  }
  return {};
}

void require_valid(const LorenzCurve& curve, std::size_t grid_size) {
  auto report = validate(curve, grid_size);
  if (!report.passed) {
    throw ValidationError(curve.describe() + ": " + report.reason);
  }
}

}  // namespace kolkata
