#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kolkata/analysis.hpp"

namespace kolkata {

/// Invariant suites run by `kolkata verify`.
enum class Suite {
  ordering,     ///< G >= P >= normalized k
  fixed_point,  ///< |k + L(k) - 1| small and 1/2 <= k <= p*
  interval,     ///< k lies in every division interval on a 200-point grid
  symmetry_kp,  ///< symmetric curves have Pietra proportion = k
  triangle,     ///< triangle area bounds around the fixed point
  induced,      ///< chord curves dominate L and have Gini q - L(q)
};

[[nodiscard]] const char* suite_name(Suite suite) noexcept;
[[nodiscard]] std::optional<Suite> parse_suite(std::string_view name) noexcept;
[[nodiscard]] std::vector<Suite> all_suites();

struct VerifyOptions {
  std::vector<Suite> suites = all_suites();
  std::size_t random_curves = 1000;
  std::uint64_t seed = 20170818;
  bool include_presets = true;
  /// Checked alongside the presets (e.g. user-supplied or broken curves).
  std::vector<LabeledCurve> extra_curves;
};

struct CaseFailure {
  std::string label;
  std::string message;
  std::string curve;  ///< describe() output, enough to rebuild the curve
};

struct SuiteResult {
  Suite suite = Suite::ordering;
  std::size_t named_passed = 0;
  std::size_t named_total = 0;
  std::size_t random_passed = 0;
  std::size_t random_total = 0;
  std::vector<CaseFailure> failures;

  [[nodiscard]] bool passed() const noexcept { return failures.empty(); }
};

/// Runs one check of `suite` against `curve`; returns an error message, or
/// nothing when the invariant holds.  Curves failing validation fail.
[[nodiscard]] std::optional<std::string> check_invariant(Suite suite, const LorenzCurve& curve);

[[nodiscard]] std::vector<SuiteResult> run_verification(const VerifyOptions& options);

}  // namespace kolkata
