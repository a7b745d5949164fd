#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "kolkata/indices.hpp"
#include "kolkata/lorenz.hpp"

namespace kolkata {

/// Grid check of L(1 - L(p)) = 1 - p, equivalently L(p) + r(p) = 1.
/// A passing grid does not prove the identity between grid points.
[[nodiscard]] bool is_symmetric(const LorenzCurve& curve, std::size_t grid_size = 1001,
                                double tol = 1e-9);

struct CoincidenceReport {
  double gini = 0.0;
  double pietra = 0.0;
  double normalized_k = 0.0;
  double k = 0.5;
  double pietra_argmax = 0.0;
  double gini_pietra_gap = 0.0;  ///< G - P
  double pietra_k_gap = 0.0;     ///< P - normalized k
  double gini_k_gap = 0.0;       ///< G - normalized k
  bool kp_coincides = false;
  bool gk_coincides = false;
  bool all_coincide = false;
  bool symmetric = false;
  double tolerance = 0.0;
};

/// Compares the Pietra proportion with k.  `kp_coincides` holds when the
/// argmax is within `tol` of k, or when k itself attains the maximal gap
/// (to 1e-12), which covers curves whose gap has a plateau such as the
/// egalitarian one.  `gk_coincides` compares G with normalized k, and
/// `all_coincide` additionally requires |G - P| <= tol.
[[nodiscard]] CoincidenceReport check_kp(const LorenzCurve& curve, double tol = 1e-6);

/// Two segments meeting at (K, 1 - K), for K in [1/2, 1).
[[nodiscard]] LorenzCurve coincidence_family(double k);

struct FamilyMatch {
  bool member = false;           ///< curve matches coincidence_family(k) on the grid
  double k = 0.5;
  double max_deviation = 0.0;    ///< max |L(p) - family(p)| on the grid
  bool indices_coincide = false;  ///< |G - P| and |P - normalized k| <= tol
  /// Any convex curve deviates from the family member with the same k by
  /// at most (G - normalized k) / min(k, 1 - k); larger deviations mean
  /// the computed indices are inconsistent with the curve.
  double deviation_bound = 0.0;

  [[nodiscard]] bool inconsistent() const noexcept { return max_deviation > deviation_bound; }
  explicit operator bool() const noexcept { return member; }
};

[[nodiscard]] FamilyMatch detect_coincidence_family(const LorenzCurve& curve,
                                                    std::size_t grid_size = 1001,
                                                    double tol = 1e-9);

/// Chord curve through (0,0), (q, L(q)) and (1,1), for q in (0, 1).
/// It lies above L and its Gini coefficient equals q - L(q).
[[nodiscard]] LorenzCurve induced_lorenz(const LorenzCurve& curve, double q);

struct TriangleAreas {
  double k = 0.5;
  double below = 0.0;     ///< integral over [0, k] of L(k) - L(t)
  double above = 0.0;     ///< integral over [k, 1] of L(t) - L(k)
  double triangle = 0.0;  ///< k (1 - k) / 2
};

/// Areas bounding the Lorenz curve around its fixed point; convexity gives
/// below >= triangle >= above.
[[nodiscard]] TriangleAreas triangle_areas(const LorenzCurve& curve,
                                           double tol = kDefaultTolerance);

struct LabeledCurve {
  std::string label;
  LorenzCurve curve;
};

enum class IndexKind { normalized_k, pietra, gini };

[[nodiscard]] const char* index_name(IndexKind kind) noexcept;
[[nodiscard]] double index_value(const IndexReport& report, IndexKind kind) noexcept;

struct RankedEntry {
  std::string label;
  double value = 0.0;
  std::size_t rank = 1;  ///< competition ranking; ties share a rank
};

struct Ordering {
  IndexKind index = IndexKind::normalized_k;
  std::vector<RankedEntry> entries;  ///< most unequal first
};

/// Two indices order a pair of curves differently (a tie counts as an order).
struct Discordance {
  std::string first;
  std::string second;
  IndexKind index_a = IndexKind::normalized_k;
  IndexKind index_b = IndexKind::pietra;
};

struct RankingTable {
  std::vector<std::pair<std::string, IndexReport>> reports;
  std::vector<Ordering> orderings;
  std::vector<Discordance> discordances;
  double tie_tolerance = 0.0;

  [[nodiscard]] bool discordant() const noexcept { return !discordances.empty(); }
};

/// Computes a report per curve, ranks by each index (ties within
/// `tie_tol`) and lists discordant pairs.  Errors are rethrown with the
/// offending label prefixed, keeping their type.
[[nodiscard]] RankingTable rank(std::span<const LabeledCurve> curves,
                                double tol = kDefaultTolerance, double tie_tol = 1e-8);

}  // namespace kolkata
