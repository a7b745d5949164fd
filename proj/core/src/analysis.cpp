#include "kolkata/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "number_format.hpp"

namespace kolkata {

namespace {

constexpr double kPlateauTolerance = 1e-12;

int compare(double a, double b, double tie_tol) {
  if (std::abs(a - b) <= tie_tol) return 0;
  return a < b ? -1 : 1;
}

template <typename Error>
[[noreturn]] void rethrow_labeled(const std::string& label, const Error& error) {
  throw Error(label + ": " + error.what());
}

}  // namespace

bool is_symmetric(const LorenzCurve& curve, std::size_t grid_size, double tol) {
  if (grid_size < 3) throw std::invalid_argument("symmetry grid needs at least 3 points");
  const auto last = static_cast<double>(grid_size - 1);
  for (std::size_t i = 0; i < grid_size; ++i) {
    const double p = static_cast<double>(i) / last;
    if (std::abs(curve(complementary(curve, p)) - (1.0 - p)) > tol) return false;
  }
  return true;
}

CoincidenceReport check_kp(const LorenzCurve& curve, double tol) {
  CoincidenceReport report;
  report.tolerance = tol;
  report.k = k_index(curve);
  report.normalized_k = 2.0 * report.k - 1.0;
  report.gini = gini(curve);
  const auto p = pietra(curve);
  report.pietra = p.value;
  report.pietra_argmax = p.argmax;
  report.gini_pietra_gap = report.gini - report.pietra;
  report.pietra_k_gap = report.pietra - report.normalized_k;
  report.gini_k_gap = report.gini - report.normalized_k;

  const double gap_at_k = report.k - curve(report.k);
  report.kp_coincides = std::abs(report.pietra_argmax - report.k) <= tol ||
                        std::abs(report.pietra - gap_at_k) <= kPlateauTolerance;
  report.gk_coincides = std::abs(report.gini_k_gap) <= tol;
  report.all_coincide =
      report.kp_coincides && report.gk_coincides && std::abs(report.gini_pietra_gap) <= tol;
  report.symmetric = is_symmetric(curve);
  return report;
}

LorenzCurve coincidence_family(double k) {
  if (!(k >= 0.5 && k < 1.0)) {
    throw std::domain_error("coincidence family needs K in [1/2, 1), got " +
                            detail::format_number(k));
  }
  return LorenzCurve(TwoPieceK{k});
}

FamilyMatch detect_coincidence_family(const LorenzCurve& curve, std::size_t grid_size,
                                      double tol) {
  if (grid_size < 3) throw std::invalid_argument("family grid needs at least 3 points");
  FamilyMatch match;
  match.k = k_index(curve);
  const auto family = coincidence_family(std::clamp(match.k, 0.5, std::nextafter(1.0, 0.0)));

  const auto last = static_cast<double>(grid_size - 1);
  for (std::size_t i = 0; i < grid_size; ++i) {
    const double p = static_cast<double>(i) / last;
    match.max_deviation = std::max(match.max_deviation, std::abs(curve(p) - family(p)));
  }
  match.member = match.max_deviation <= tol;

  const double g = gini(curve);
  const double pie = pietra(curve).value;
  const double nk = 2.0 * match.k - 1.0;
  match.indices_coincide = std::abs(g - pie) <= tol && std::abs(pie - nk) <= tol;
  match.deviation_bound = std::max(g - nk, 0.0) / std::min(match.k, 1.0 - match.k) + tol;
  return match;
}

LorenzCurve induced_lorenz(const LorenzCurve& curve, double q) {
  if (!(q > 0.0 && q < 1.0)) {
    throw std::domain_error("induced curve needs q in (0, 1), got " + detail::format_number(q));
  }
  return LorenzCurve(PiecewiseLinearLorenz({{0.0, 0.0}, {q, curve(q)}, {1.0, 1.0}}));
}

TriangleAreas triangle_areas(const LorenzCurve& curve, double tol) {
  TriangleAreas areas;
  const double k = k_index(curve, tol);
  const double at_k = curve(k);
  areas.k = k;
  areas.below = k * at_k - lorenz_integral(curve, 0.0, k, tol);
  areas.above = lorenz_integral(curve, k, 1.0, tol) - (1.0 - k) * at_k;
  areas.triangle = 0.5 * k * (1.0 - k);
  return areas;
}

const char* index_name(IndexKind kind) noexcept {
  switch (kind) {
    case IndexKind::normalized_k:
      return "normalized_k";
    case IndexKind::pietra:
      return "pietra";
    case IndexKind::gini:
      return "gini";
  }
  return "unknown";
}

double index_value(const IndexReport& report, IndexKind kind) noexcept {
  switch (kind) {
    case IndexKind::normalized_k:
      return report.normalized_k;
    case IndexKind::pietra:
      return report.pietra;
    case IndexKind::gini:
      return report.gini;
  }
  return 0.0;
}

RankingTable rank(std::span<const LabeledCurve> curves, double tol, double tie_tol) {
  if (curves.size() < 2) throw std::invalid_argument("ranking needs at least two curves");
  RankingTable table;
  table.tie_tolerance = tie_tol;
  for (const auto& [label, curve] : curves) {
    try {
      table.reports.emplace_back(label, index_report(curve, tol));
    } catch (const ValidationError& e) {
      rethrow_labeled(label, e);
    } catch (const std::domain_error& e) {
      rethrow_labeled(label, e);
    } catch (const BracketError& e) {
      rethrow_labeled(label, e);
    } catch (const QuadratureError& e) {
      rethrow_labeled(label, e);
    } catch (const std::invalid_argument& e) {
      rethrow_labeled(label, e);
    }
  }

  constexpr IndexKind kinds[] = {IndexKind::normalized_k, IndexKind::pietra, IndexKind::gini};
  for (IndexKind kind : kinds) {
    Ordering ordering{kind, {}};
    for (const auto& [label, report] : table.reports) {
      ordering.entries.push_back({label, index_value(report, kind), 1});
    }
    std::stable_sort(ordering.entries.begin(), ordering.entries.end(),
                     [](const RankedEntry& a, const RankedEntry& b) { return a.value > b.value; });
    for (std::size_t i = 1; i < ordering.entries.size(); ++i) {
      auto& entry = ordering.entries[i];
      const auto& previous = ordering.entries[i - 1];
      entry.rank = compare(entry.value, previous.value, tie_tol) == 0 ? previous.rank : i + 1;
    }
    table.orderings.push_back(std::move(ordering));
  }

  const auto& reports = table.reports;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    for (std::size_t j = i + 1; j < reports.size(); ++j) {
      for (std::size_t a = 0; a < std::size(kinds); ++a) {
        for (std::size_t b = a + 1; b < std::size(kinds); ++b) {
          const int order_a = compare(index_value(reports[i].second, kinds[a]),
                                      index_value(reports[j].second, kinds[a]), tie_tol);
          const int order_b = compare(index_value(reports[i].second, kinds[b]),
                                      index_value(reports[j].second, kinds[b]), tie_tol);
          if (order_a != order_b) {
            table.discordances.push_back(
                {reports[i].first, reports[j].first, kinds[a], kinds[b]});
          }
        }
      }
    }
  }
  return table;
}

}  // namespace kolkata
