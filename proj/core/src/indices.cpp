#include "kolkata/indices.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "number_format.hpp"
#include "quadrature.hpp"

namespace kolkata {

namespace {

constexpr double kBracketSlack = 1e-12;
constexpr int kMaxIterations = 400;

void require_fraction(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::domain_error(std::string(what) + " must lie in [0, 1], got " +
                            detail::format_number(p));
  }
}

void require_tolerance(double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
}

double k_index_piecewise(const PiecewiseLinearLorenz& curve) {
  const auto pts = curve.points();
  for (std::size_t i = 1; i < pts.size(); ++i) {
    const double z = 1.0 - pts[i].value - pts[i].p;
    if (z > 0.0) continue;
    if (z == 0.0) return pts[i].p;
    // Z crosses zero inside segment i-1: 1 - (v0 + s (k - p0)) - k = 0.
    const auto& lo = pts[i - 1];
    const double s = curve.slope(i - 1);
    const double k = (1.0 - lo.value + s * lo.p) / (1.0 + s);
    return std::clamp(k, lo.p, pts[i].p);
  }
  throw BracketError("no sign change of 1 - L(p) - p on the vertex list");
}

// Segment integral of a linear interpolant over [lo, hi] within one segment.
double trapezoid(const PiecewiseLinearLorenz& curve, double lo, double hi) {
  return 0.5 * (hi - lo) * (curve(lo) + curve(hi));
}

double integral_piecewise(const PiecewiseLinearLorenz& curve, double lo, double hi) {
  const auto pts = curve.points();
  double total = 0.0;
  double start = lo;
  for (std::size_t i = 1; i < pts.size() && start < hi; ++i) {
    if (pts[i].p <= start) continue;
    const double end = std::min(pts[i].p, hi);
    total += trapezoid(curve, start, end);
    start = end;
  }
  return total;
}

// Smooth stretches of an analytic curve between its kinks, clipped to [lo, hi].
std::vector<double> smooth_pieces(const LorenzCurve& curve, double lo, double hi) {
  std::vector<double> cuts{lo};
  for (double kink : curve.kinks()) {
    if (kink > lo && kink < hi) cuts.push_back(kink);
  }
  cuts.push_back(hi);
  return cuts;
}

double gap(const LorenzCurve& curve, double p) { return p - curve(p); }

// Golden-section maximization of the concave gap on [a, b].  Returns the
// best of the bracket midpoint and both ends, preferring smaller p on ties.
PietraResult maximize_gap(const LorenzCurve& curve, double a, double b, double tol) {
  const double left_end = a;
  const double right_end = b;
  const double shrink = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = b - shrink * (b - a);
  double x2 = a + shrink * (b - a);
  double g1 = gap(curve, x1);
  double g2 = gap(curve, x2);
  for (int it = 0; it < kMaxIterations && b - a > tol; ++it) {
    if (g1 < g2) {
      a = x1;
      x1 = x2;
      g1 = g2;
      x2 = a + shrink * (b - a);
      g2 = gap(curve, x2);
    } else {
      b = x2;
      x2 = x1;
      g2 = g1;
      x1 = b - shrink * (b - a);
      g1 = gap(curve, x1);
    }
  }
  PietraResult best{left_end, gap(curve, left_end)};
  for (double p : {0.5 * (a + b), right_end}) {
    const double value = gap(curve, p);
    if (value > best.value) best = {p, value};
  }
  return best;
}

}  // namespace

double k_index(const LorenzCurve& curve, double tol) {
  require_tolerance(tol);
  if (const auto* pl = curve.piecewise()) {
    const double k = k_index_piecewise(*pl);
    if (k < 0.5 - kBracketSlack) {
      throw BracketError("fixed point " + detail::format_number(k) +
                         " lies below 1/2; the curve rises above the diagonal");
    }
    return k;
  }

  auto z = [&curve](double p) { return 1.0 - curve(p) - p; };
  double lo = 0.5;
  double hi = p_star(curve);
  const double z_lo = z(lo);
  const double z_hi = z(hi);
  if (z_lo < -kBracketSlack || z_hi > kBracketSlack || hi < lo - kBracketSlack) {
    throw BracketError("1 - L(p) - p does not change sign on [1/2, p*] = [0.5, " +
                       detail::format_number(hi) + "]");
  }
  if (z_lo <= 0.0) return lo;
  if (z_hi >= 0.0) return hi;
  for (int it = 0; it < kMaxIterations; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double value = z(mid);
    if (value == 0.0) return mid;
    if (value > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (std::abs(value) <= 0.5 * tol && hi - lo <= tol) return mid;
  }
  return 0.5 * (lo + hi);
}

double normalized_k(const LorenzCurve& curve, double tol) { return 2.0 * k_index(curve, tol) - 1.0; }

double lorenz_integral(const LorenzCurve& curve, double lo, double hi, double tol) {
  require_fraction(lo, "lower limit");
  require_fraction(hi, "upper limit");
  require_tolerance(tol);
  if (hi < lo) return -lorenz_integral(curve, hi, lo, tol);
  if (hi == lo) return 0.0;
  if (const auto* pl = curve.piecewise()) return integral_piecewise(*pl, lo, hi);

  const auto cuts = smooth_pieces(curve, lo, hi);
  const double piece_tol = tol / static_cast<double>(cuts.size() - 1);
  double total = 0.0;
  for (std::size_t i = 1; i < cuts.size(); ++i) {
    const double a = cuts[i - 1];
    const double b = cuts[i];
    total += detail::integrate(
        [&curve, a, b](double t) { return curve(std::clamp(t, a, b)); }, a, b, piece_tol);
  }
  return total;
}

double gini(const LorenzCurve& curve, double tol) {
  require_tolerance(tol);
  if (const auto* pl = curve.piecewise()) {
    const auto pts = pl->points();
    double twice_area = 0.0;
    for (std::size_t i = 1; i < pts.size(); ++i) {
      twice_area += (pts[i].p - pts[i - 1].p) * (pts[i].value + pts[i - 1].value);
    }
    return 1.0 - twice_area;
  }
  return 1.0 - 2.0 * lorenz_integral(curve, 0.0, 1.0, 0.5 * tol);
}

PietraResult pietra(const LorenzCurve& curve, double tol) {
  require_tolerance(tol);
  if (const auto* pl = curve.piecewise()) {
    PietraResult best{0.0, 0.0};
    bool first = true;
    for (const auto& bp : pl->points()) {
      const double value = bp.p - bp.value;
      if (first || value > best.value) best = {bp.p, value};
      first = false;
    }
    return best;
  }
  const auto cuts = smooth_pieces(curve, 0.0, 1.0);
  PietraResult best{0.0, 0.0};
  for (std::size_t i = 1; i < cuts.size(); ++i) {
    const auto candidate = maximize_gap(curve, cuts[i - 1], cuts[i], tol);
    if (i == 1 || candidate.value > best.value) best = candidate;
  }
  return best;
}

double disparity(const LorenzCurve& curve, double p) { return 0.5 * (p - curve(p)); }

DisparityProfile disparity_profile(const LorenzCurve& curve, std::size_t points) {
  if (points < 2) throw std::invalid_argument("disparity profile needs at least 2 points");
  DisparityProfile profile;
  profile.reserve(points);
  const auto last = static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) {
    const double p = static_cast<double>(i) / last;
    profile.push_back({p, disparity(curve, p)});
  }
  return profile;
}

double pareto_ratio(const LorenzCurve& curve, double tol) {
  const double k = k_index(curve, tol);
  return k / (1.0 - k);
}

BoundaryDistances boundary_distances(const LorenzCurve& curve, double p) {
  const double value = curve(p);
  return {std::hypot(p, value), std::hypot(1.0 - p, 1.0 - value)};
}

double surplus(const LorenzCurve& curve, double upper, double tol) {
  require_fraction(upper, "P");
  return upper - 0.5 * upper * upper - lorenz_integral(curve, 0.0, upper, tol);
}

double deficit(const LorenzCurve& curve, double lower, double tol) {
  require_fraction(lower, "P");
  const double rest = 1.0 - lower;
  return 0.5 * rest * rest - lorenz_integral(curve, lower, 1.0, tol);
}

DivisionInterval interval_set(const LorenzCurve& curve, double p) {
  const double r = r_of(curve, p);
  return {std::min(p, r), std::max(p, r)};
}

IndexReport index_report(const LorenzCurve& curve, double tol) {
  require_valid(curve);
  IndexReport report;
  report.k = k_index(curve, tol);
  report.normalized_k = 2.0 * report.k - 1.0;
  report.gini = gini(curve, tol);
  const auto p = pietra(curve, tol);
  report.pietra = p.value;
  report.pietra_argmax = p.argmax;
  report.p_star = p_star(curve);
  report.pareto_ratio = report.k / (1.0 - report.k);
  report.root_tolerance = tol;
  report.quadrature_tolerance = tol;
  return report;
}

}  // namespace kolkata
