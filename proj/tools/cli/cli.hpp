#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "kolkata/indices.hpp"
#include "kolkata/lorenz.hpp"

namespace kolkata::cli {

inline constexpr int kSuccess = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kInputError = 2;
inline constexpr int kValidationError = 3;

/// Unreadable input, malformed CSV or a bad command line.  Maps to exit 2.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& message, std::size_t line = 0)
      : std::runtime_error(line == 0 ? message : "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  [[nodiscard]] std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// 0-based column index or header name.
using ColumnSelector = std::variant<std::size_t, std::string>;

/// All digits selects by index, anything else by header name.
[[nodiscard]] ColumnSelector parse_column(std::string_view text);

/// Reads one income per row from plain comma-separated text.  Blank lines
/// and lines starting with '#' are skipped.  When a column name is given,
/// the first remaining line is taken as the header if it does not parse
/// as a number.  Throws InputError (with line number) for unparsable
/// fields and ValidationError for negative incomes.
[[nodiscard]] std::vector<double> read_incomes(std::istream& in, const ColumnSelector& column);

/// As read_incomes; "-" reads standard input.
[[nodiscard]] std::vector<double> read_incomes_file(const std::string& path,
                                                    const ColumnSelector& column);

enum class Format { json, tsv };

struct RunConfig {
  std::string subcommand;
  std::vector<std::string> inputs;
  std::vector<std::string> presets;
  std::string column = "0";
  std::optional<std::string> dist;
  std::optional<double> a;
  std::optional<double> b;
  std::optional<double> lambda;
  std::optional<double> alpha;
  std::optional<double> xm;
  std::optional<double> k_param;
  Format format = Format::json;
  std::size_t points = 101;
  double tol = kDefaultTolerance;
  std::uint64_t seed = 20170818;
  std::vector<std::string> suites;
  std::optional<std::size_t> random;
  std::string out;
};

/// A curve plus the sample metadata that goes into its report.
struct LoadedCurve {
  std::string label;
  LorenzCurve curve;
  std::size_t n = 0;
  double mean = 0.0;
};

[[nodiscard]] LoadedCurve load_file(const std::string& path, const ColumnSelector& column);
[[nodiscard]] LoadedCurve load_distribution(const RunConfig& config);
[[nodiscard]] LoadedCurve load_preset(const std::string& name);

[[nodiscard]] nlohmann::ordered_json report_json(const IndexReport& report);

int cmd_analyze(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_curve(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_compare(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses the command line, dispatches, and maps errors to exit codes.
/// Output goes to `out`, or atomically to --out when given.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace kolkata::cli
