#include "kolkata/verify.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <random>
#include <sstream>

#include "kolkata/presets.hpp"
#include "kolkata/random_curves.hpp"

namespace kolkata {

namespace {

constexpr double kOrderingSlack = 1e-9;
constexpr double kResidualTolerance = 1e-9;
constexpr double kBracketSlack = 1e-12;
constexpr double kInverseTolerance = 1e-12;
constexpr std::size_t kIntervalGrid = 200;
constexpr double kSymmetryTolerance = 1e-9;
constexpr double kKpTolerance = 1e-6;
constexpr double kAreaSlack = 1e-9;
constexpr double kDominanceSlack = 1e-12;

std::string fmt(double x) {
  std::ostringstream out;
  out.precision(17);
  out << x;
  return out.str();
}

std::optional<std::string> check_ordering(const LorenzCurve& curve) {
  const auto report = index_report(curve);
  if (report.gini < report.pietra - kOrderingSlack) {
    return "gini " + fmt(report.gini) + " < pietra " + fmt(report.pietra);
  }
  if (report.pietra < report.normalized_k - kOrderingSlack) {
    return "pietra " + fmt(report.pietra) + " < normalized k " + fmt(report.normalized_k);
  }
  return std::nullopt;
}

std::optional<std::string> check_fixed_point(const LorenzCurve& curve) {
  const double k = k_index(curve);
  const double residual = k + curve(k) - 1.0;
  if (std::abs(residual) > kResidualTolerance) return "fixed-point residual " + fmt(residual);
  const double upper = p_star(curve);
  if (k < 0.5 - kBracketSlack || k > upper + kBracketSlack) {
    return "k " + fmt(k) + " outside [1/2, p*] with p* " + fmt(upper);
  }
  return std::nullopt;
}

std::optional<std::string> check_interval(const LorenzCurve& curve) {
  const double k = k_index(curve);
  const double upper = p_star(curve);
  const double step = upper / static_cast<double>(kIntervalGrid - 1);
  DivisionInterval common{0.0, 1.0};
  for (std::size_t i = 0; i < kIntervalGrid; ++i) {
    const double p = i + 1 == kIntervalGrid ? upper : static_cast<double>(i) * step;
    const auto c = interval_set(curve, p);
    common.lo = std::max(common.lo, c.lo);
    common.hi = std::min(common.hi, c.hi);
  }
  if (!common.contains(k, 1e-9)) {
    return "k " + fmt(k) + " outside intersection [" + fmt(common.lo) + ", " + fmt(common.hi) + "]";
  }
  if (common.width() > 2.0 * (step + kInverseTolerance)) {
    return "intersection width " + fmt(common.width()) + " exceeds twice the grid step";
  }
  return std::nullopt;
}

std::optional<std::string> check_symmetry_kp(const LorenzCurve& curve) {
  if (!is_symmetric(curve, 1001, kSymmetryTolerance)) return std::nullopt;
  const auto report = check_kp(curve, kKpTolerance);
  if (!report.kp_coincides) {
    return "symmetric curve with pietra proportion " + fmt(report.pietra_argmax) + " != k " +
           fmt(report.k);
  }
  return std::nullopt;
}

std::optional<std::string> check_triangle(const LorenzCurve& curve) {
  const auto areas = triangle_areas(curve);
  if (areas.below < areas.triangle - kAreaSlack) {
    return "area below L(k) " + fmt(areas.below) + " < k(1-k)/2 = " + fmt(areas.triangle);
  }
  if (areas.above > areas.triangle + kAreaSlack) {
    return "area above L(k) " + fmt(areas.above) + " > k(1-k)/2 = " + fmt(areas.triangle);
  }
  return std::nullopt;
}

std::optional<std::string> check_induced(const LorenzCurve& curve) {
  std::vector<double> qs{0.1, 0.25, 0.5, 0.75, 0.9};
  qs.push_back(std::clamp(k_index(curve), 1e-6, 1.0 - 1e-6));
  for (double q : qs) {
    const auto chord = induced_lorenz(curve, q);
    for (int i = 0; i <= 1000; ++i) {
      const double p = i / 1000.0;
      if (chord(p) < curve(p) - kDominanceSlack) {
        return "induced curve at q=" + fmt(q) + " falls below L at p=" + fmt(p);
      }
    }
    const double closed_form = q - curve(q);
    if (std::abs(gini(chord) - closed_form) > 1e-12) {
      return "induced Gini " + fmt(gini(chord)) + " != q - L(q) = " + fmt(closed_form);
    }
  }
  return std::nullopt;
}

}  // namespace

const char* suite_name(Suite suite) noexcept {
  switch (suite) {
    case Suite::ordering:
      return "ordering";
    case Suite::fixed_point:
      return "fixed-point";
    case Suite::interval:
      return "interval";
    case Suite::symmetry_kp:
      return "symmetry-kp";
    case Suite::triangle:
      return "triangle";
    case Suite::induced:
      return "induced";
  }
  return "unknown";
}

std::vector<Suite> all_suites() {
  return {Suite::ordering, Suite::fixed_point, Suite::interval,
          Suite::symmetry_kp, Suite::triangle, Suite::induced};
}

std::optional<Suite> parse_suite(std::string_view name) noexcept {
  for (Suite suite : all_suites()) {
    if (name == suite_name(suite)) return suite;
  }
  return std::nullopt;
}

std::optional<std::string> check_invariant(Suite suite, const LorenzCurve& curve) {
  try {
    if (auto report = validate(curve); !report) return "validation failed: " + report.reason;
    switch (suite) {
      case Suite::ordering:
        return check_ordering(curve);
      case Suite::fixed_point:
        return check_fixed_point(curve);
      case Suite::interval:
        return check_interval(curve);
      case Suite::symmetry_kp:
        return check_symmetry_kp(curve);
      case Suite::triangle:
        return check_triangle(curve);
      case Suite::induced:
        return check_induced(curve);
    }
  } catch (const std::exception& e) {
    return std::string("error: ") + e.what();
  }
  return std::nullopt;
}

std::vector<SuiteResult> run_verification(const VerifyOptions& options) {
  std::vector<LabeledCurve> named;
  if (options.include_presets) {
    for (const auto& name : preset_names()) named.push_back({name, preset(name)});
  }
  named.insert(named.end(), options.extra_curves.begin(), options.extra_curves.end());

  std::vector<SuiteResult> results;
  for (Suite suite : options.suites) {
    SuiteResult result;
    result.suite = suite;
    for (const auto& [label, curve] : named) {
      ++result.named_total;
      if (auto failure = check_invariant(suite, curve)) {
        result.failures.push_back({label, *failure, curve.describe()});
      } else {
        ++result.named_passed;
      }
    }
    // Every suite sees the same random curves.
    std::mt19937_64 rng(options.seed);
    for (std::size_t i = 0; i < options.random_curves; ++i) {
      const LorenzCurve curve = random_convex_curve(rng);
      ++result.random_total;
      if (auto failure = check_invariant(suite, curve)) {
        result.failures.push_back({"random#" + std::to_string(i), *failure, curve.describe()});
      } else {
        ++result.random_passed;
      }
    }
    results.push_back(std::move(result));
  }
  return results;
}

}  // namespace kolkata
