#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "kolkata/analysis.hpp"
#include "kolkata/empirical.hpp"
#include "kolkata/presets.hpp"
#include "kolkata/verify.hpp"

namespace kolkata::cli {

namespace {

std::string num(double value) {
  std::array<char, 64> buffer{};
  const auto [end, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
  return ec == std::errc{} ? std::string(buffer.data(), end) : std::string("nan");
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    fields.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

std::optional<double> parse_number(std::string_view text) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || end != text.data() + text.size() || !std::isfinite(value)) {
    return std::nullopt;
  }
  return value;
}

void write_atomically(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path temp = target;
  temp += ".tmp";
  {
    std::ofstream file(temp, std::ios::binary | std::ios::trunc);
    if (!file) throw InputError("cannot open '" + temp.string() + "' for writing");
    file << content;
    file.flush();
    if (!file) throw InputError("failed writing '" + temp.string() + "'");
  }
  std::error_code ec;
  fs::rename(temp, target, ec);
  if (ec) {
    fs::remove(temp, ec);
    throw InputError("cannot move output into place at '" + path + "'");
  }
}

// Runs `body`, translating exceptions into the documented exit codes.
int guarded(const std::function<int()>& body, std::ostream& err) {
  try {
    return body();
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const ValidationError& e) {
    err << "invalid input: " << e.what() << '\n';
    return kValidationError;
  } catch (const std::domain_error& e) {
    err << "invalid input: " << e.what() << '\n';
    return kValidationError;
  } catch (const BracketError& e) {
    err << "invalid input: " << e.what() << '\n';
    return kValidationError;
  } catch (const QuadratureError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kValidationError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

double require_param(const std::optional<double>& value, const char* flag, const std::string& dist) {
  if (!value) throw InputError(std::string(flag) + " is required for --dist " + dist);
  return *value;
}

std::size_t source_count(const RunConfig& config) {
  return config.inputs.size() + config.presets.size() + (config.dist ? 1 : 0);
}

LoadedCurve load_single(const RunConfig& config) {
  if (source_count(config) != 1) {
    throw InputError("exactly one of --input, --dist or --preset is required");
  }
  if (!config.inputs.empty()) return load_file(config.inputs.front(), parse_column(config.column));
  if (!config.presets.empty()) return load_preset(config.presets.front());
  return load_distribution(config);
}

IndexReport full_report(const LoadedCurve& loaded, double tol) {
  auto report = index_report(loaded.curve, tol);
  report.n = loaded.n;
  report.mean = loaded.mean;
  return report;
}

std::string unique_label(std::string label, const std::vector<LoadedCurve>& existing) {
  const auto taken = [&](const std::string& candidate) {
    return std::any_of(existing.begin(), existing.end(),
                       [&](const LoadedCurve& c) { return c.label == candidate; });
  };
  if (!taken(label)) return label;
  for (int suffix = 2;; ++suffix) {
    auto candidate = label + "#" + std::to_string(suffix);
    if (!taken(candidate)) return candidate;
  }
}

}  // namespace

ColumnSelector parse_column(std::string_view text) {
  text = trim(text);
  if (!text.empty() && std::all_of(text.begin(), text.end(),
                                   [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    std::size_t index = 0;
    std::from_chars(text.data(), text.data() + text.size(), index);
    return index;
  }
  if (text.empty()) throw InputError("--column must not be empty");
  return std::string(text);
}

std::vector<double> read_incomes(std::istream& in, const ColumnSelector& column) {
  std::vector<double> incomes;
  std::optional<std::size_t> index;
  if (const auto* i = std::get_if<std::size_t>(&column)) index = *i;
  const auto* name = std::get_if<std::string>(&column);

  std::string raw;
  std::size_t line_number = 0;
  bool seen_data = false;
  while (std::getline(in, raw)) {
    ++line_number;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto fields = split_fields(line);

    if (!seen_data && name) {
      seen_data = true;
      const auto header_at = std::find(fields.begin(), fields.end(), std::string_view(*name));
      if (header_at != fields.end()) {
        index = static_cast<std::size_t>(header_at - fields.begin());
        continue;
      }
      const bool numeric = std::all_of(fields.begin(), fields.end(),
                                       [](std::string_view f) { return parse_number(f).has_value(); });
      throw InputError(numeric ? "column '" + *name + "' needs a header row"
                               : "header has no column named '" + *name + "'",
                       line_number);
    }
    seen_data = true;

    if (*index >= fields.size()) {
      throw InputError("row has " + std::to_string(fields.size()) + " field(s), column " +
                           std::to_string(*index) + " requested",
                       line_number);
    }
    const auto value = parse_number(fields[*index]);
    if (!value) {
      throw InputError("cannot parse '" + std::string(fields[*index]) + "' as a number",
                       line_number);
    }
    if (*value < 0.0) {
      throw ValidationError("line " + std::to_string(line_number) + ": negative income " +
                            std::string(fields[*index]));
    }
    incomes.push_back(*value);
  }
  if (in.bad()) throw InputError("read error");
  if (incomes.empty()) throw InputError("input contains no incomes");
  return incomes;
}

std::vector<double> read_incomes_file(const std::string& path, const ColumnSelector& column) {
  if (path == "-") return read_incomes(std::cin, column);
  std::ifstream file(path);
  if (!file) throw InputError("cannot open '" + path + "'");
  try {
    return read_incomes(file, column);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  } catch (const ValidationError& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

LoadedCurve load_file(const std::string& path, const ColumnSelector& column) {
  IncomeSample sample(read_incomes_file(path, column));
  return {path, LorenzCurve(lorenz_from_sample(sample)), sample.size(), sample.mean()};
}

LoadedCurve load_distribution(const RunConfig& config) {
  const std::string& dist = *config.dist;
  if (dist == "uniform") {
    const double a = config.a.value_or(0.0);
    const double b = config.b.value_or(1.0);
    return {"uniform", Uniform{a, b}, 0, 0.5 * (a + b)};
  }
  if (dist == "exponential") {
    const double lambda = config.lambda.value_or(1.0);
    return {"exponential", Exponential{lambda}, 0, 1.0 / lambda};
  }
  if (dist == "pareto") {
    const double alpha = require_param(config.alpha, "--alpha", dist);
    const double xm = config.xm.value_or(1.0);
    return {"pareto", Pareto{xm, alpha}, 0, alpha * xm / (alpha - 1.0)};
  }
  if (dist == "oligarchy") {
    return {"oligarchy", Oligarchy{require_param(config.a, "--a", dist)}, 0, 0.0};
  }
  if (dist == "twopiece") {
    return {"twopiece", TwoPieceK{require_param(config.k_param, "--k-param", dist)}, 0, 0.0};
  }
  if (dist == "circular") return {"circular", CircularQuadrant{}, 0, 0.0};
  if (dist == "identity") return {"identity", LorenzCurve::identity(), 0, 0.0};
  throw InputError("unknown distribution '" + dist +
                   "' (uniform, exponential, pareto, oligarchy, twopiece, circular, identity)");
}

LoadedCurve load_preset(const std::string& name) { return {name, preset(name), 0, 0.0}; }

nlohmann::ordered_json report_json(const IndexReport& report) {
  nlohmann::ordered_json j;
  j["k"] = report.k;
  j["normalized_k"] = report.normalized_k;
  j["gini"] = report.gini;
  j["pietra"] = report.pietra;
  j["pietra_argmax"] = report.pietra_argmax;
  j["p_star"] = report.p_star;
  j["pareto_ratio"] = report.pareto_ratio;
  j["n"] = report.n;
  j["mean"] = report.mean;
  j["tolerances"] = {{"root", report.root_tolerance}, {"quadrature", report.quadrature_tolerance}};
  return j;
}

int cmd_analyze(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(
      [&] {
        const auto loaded = load_single(config);
        const auto report = full_report(loaded, config.tol);
        if (config.format == Format::json) {
          auto j = report_json(report);
          out << j.dump(2) << '\n';
        } else {
          out << "k\t" << num(report.k) << '\n'
              << "normalized_k\t" << num(report.normalized_k) << '\n'
              << "gini\t" << num(report.gini) << '\n'
              << "pietra\t" << num(report.pietra) << '\n'
              << "pietra_argmax\t" << num(report.pietra_argmax) << '\n'
              << "p_star\t" << num(report.p_star) << '\n'
              << "pareto_ratio\t" << num(report.pareto_ratio) << '\n'
              << "n\t" << report.n << '\n'
              << "mean\t" << num(report.mean) << '\n'
              << "root_tolerance\t" << num(report.root_tolerance) << '\n'
              << "quadrature_tolerance\t" << num(report.quadrature_tolerance) << '\n';
        }
        return kSuccess;
      },
      err);
}

int cmd_curve(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(
      [&] {
        if (config.points < 2) throw InputError("--points must be at least 2");
        const auto loaded = load_single(config);
        const auto report = full_report(loaded, config.tol);
        const auto& curve = loaded.curve;
        const auto last = static_cast<double>(config.points - 1);

        if (config.format == Format::tsv) {
          out << "# curve\t" << curve.describe() << '\n'
              << "# k\t" << num(report.k) << '\n'
              << "# p_star\t" << num(report.p_star) << '\n'
              << "# pietra_argmax\t" << num(report.pietra_argmax) << '\n'
              << "p\tL\tLhat\tD\n";
          for (std::size_t i = 0; i < config.points; ++i) {
            const double p = static_cast<double>(i) / last;
            const double value = curve(p);
            out << num(p) << '\t' << num(value) << '\t' << num(1.0 - value) << '\t'
                << num(0.5 * (p - value)) << '\n';
          }
        } else {
          nlohmann::ordered_json j;
          j["markers"] = {{"k", report.k},
                          {"p_star", report.p_star},
                          {"pietra_argmax", report.pietra_argmax}};
          j["columns"] = {"p", "L", "Lhat", "D"};
          auto rows = nlohmann::ordered_json::array();
          for (std::size_t i = 0; i < config.points; ++i) {
            const double p = static_cast<double>(i) / last;
            const double value = curve(p);
            rows.push_back({p, value, 1.0 - value, 0.5 * (p - value)});
          }
          j["rows"] = std::move(rows);
          out << j.dump(2) << '\n';
        }
        return kSuccess;
      },
      err);
}

int cmd_compare(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(
      [&] {
        if (source_count(config) < 2) {
          throw InputError("compare needs at least two inputs (--input, --preset, --dist)");
        }
        std::vector<LoadedCurve> loaded;
        int worst = kSuccess;
        auto attempt = [&](const std::string& label, const std::function<LoadedCurve()>& load) {
          std::ostringstream messages;
          const int code = guarded(
              [&] {
                auto curve = load();
                require_valid(curve.curve);
                curve.label = unique_label(curve.label, loaded);
                loaded.push_back(std::move(curve));
                return kSuccess;
              },
              messages);
          if (code != kSuccess) {
            err << label << ": " << messages.str();
            worst = std::max(worst, code);
          }
        };
        const auto column = parse_column(config.column);
        for (const auto& path : config.inputs) {
          attempt(path, [&] { return load_file(path, column); });
        }
        for (const auto& name : config.presets) {
          attempt(name, [&] { return load_preset(name); });
        }
        if (config.dist) attempt(*config.dist, [&] { return load_distribution(config); });
        if (worst != kSuccess) return worst;

        std::vector<LabeledCurve> labeled;
        for (const auto& c : loaded) labeled.push_back({c.label, c.curve});
        auto table = rank(labeled, config.tol);
        for (std::size_t i = 0; i < loaded.size(); ++i) {
          table.reports[i].second.n = loaded[i].n;
          table.reports[i].second.mean = loaded[i].mean;
        }

        if (config.format == Format::json) {
          nlohmann::ordered_json j;
          auto curves = nlohmann::ordered_json::array();
          for (const auto& [label, report] : table.reports) {
            curves.push_back({{"label", label}, {"report", report_json(report)}});
          }
          j["curves"] = std::move(curves);
          nlohmann::ordered_json orderings;
          for (const auto& ordering : table.orderings) {
            auto entries = nlohmann::ordered_json::array();
            for (const auto& e : ordering.entries) {
              entries.push_back({{"label", e.label}, {"rank", e.rank}, {"value", e.value}});
            }
            orderings[index_name(ordering.index)] = std::move(entries);
          }
          j["orderings"] = std::move(orderings);
          auto discordant = nlohmann::ordered_json::array();
          for (const auto& d : table.discordances) {
            discordant.push_back({{"first", d.first},
                                  {"second", d.second},
                                  {"indices", {index_name(d.index_a), index_name(d.index_b)}}});
          }
          j["discordant"] = std::move(discordant);
          j["tie_tolerance"] = table.tie_tolerance;
          out << j.dump(2) << '\n';
        } else {
          out << "label\tk\tnormalized_k\tpietra\tgini\trank_normalized_k\trank_pietra\trank_gini\n";
          for (const auto& [label, report] : table.reports) {
            out << label << '\t' << num(report.k) << '\t' << num(report.normalized_k) << '\t'
                << num(report.pietra) << '\t' << num(report.gini);
            for (const auto& ordering : table.orderings) {
              const auto it = std::find_if(ordering.entries.begin(), ordering.entries.end(),
                                           [&](const RankedEntry& e) { return e.label == label; });
              out << '\t' << it->rank;
            }
            out << '\n';
          }
          for (const auto& d : table.discordances) {
            out << "# discordant\t" << d.first << '\t' << d.second << '\t'
                << index_name(d.index_a) << '\t' << index_name(d.index_b) << '\n';
          }
        }
        return kSuccess;
      },
      err);
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(
      [&] {
        VerifyOptions options;
        options.seed = config.seed;
        if (config.random) options.random_curves = *config.random;
        if (!config.suites.empty()) {
          options.suites.clear();
          for (const auto& name : config.suites) {
            if (name == "all") {
              options.suites = all_suites();
              break;
            }
            const auto suite = parse_suite(name);
            if (!suite) throw InputError("unknown suite '" + name + "'");
            options.suites.push_back(*suite);
          }
        }
        // Extra curves are loaded unvalidated.
        for (const auto& name : config.presets) {
          options.extra_curves.push_back({name, preset(name)});
        }
        const auto column = parse_column(config.column);
        for (const auto& path : config.inputs) {
          auto loaded = load_file(path, column);
          options.extra_curves.push_back({loaded.label, loaded.curve});
        }

        const auto results = run_verification(options);
        std::size_t suites_passed = 0;
        for (const auto& r : results) {
          out << "suite " << suite_name(r.suite) << ": named " << r.named_passed << '/'
              << r.named_total << ", random " << r.random_passed << '/' << r.random_total << ' '
              << (r.passed() ? "PASS" : "FAIL") << '\n';
          for (const auto& f : r.failures) {
            out << "  failure [" << f.label << "] " << f.message << '\n'
                << "    curve: " << f.curve << '\n';
          }
          if (r.passed()) ++suites_passed;
        }
        out << "verification: " << suites_passed << '/' << results.size() << " suites passed (seed "
            << options.seed << ")\n";
        return suites_passed == results.size() ? kSuccess : kVerificationFailed;
      },
      err);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lorenz-curve inequality indices: Kolkata (k) index, Gini and Pietra"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for all subcommands");

  RunConfig config;
  std::string format = "json";

  auto add_source_flags = [&](CLI::App* sub, bool many) {
    if (many) {
      sub->add_option("--input", config.inputs, "CSV file(s) of incomes ('-' for stdin)");
      sub->add_option("--preset", config.presets, "Built-in named curve(s)");
    } else {
      sub->add_option("--input", config.inputs, "CSV file of incomes ('-' for stdin)")
          ->expected(1);
      sub->add_option("--preset", config.presets, "Built-in named curve")->expected(1);
    }
    sub->add_option("--column", config.column, "Column index (0-based) or header name");
    sub->add_option("--dist", config.dist,
                    "Parametric family: uniform, exponential, pareto, oligarchy, twopiece, "
                    "circular, identity");
    sub->add_option("--a", config.a, "Uniform lower bound / oligarchy share");
    sub->add_option("--b", config.b, "Uniform upper bound");
    sub->add_option("--lambda", config.lambda, "Exponential rate");
    sub->add_option("--alpha", config.alpha, "Pareto shape (> 1)");
    sub->add_option("--xm", config.xm, "Pareto scale");
    sub->add_option("--k-param", config.k_param, "Two-piece kink K in [1/2, 1)");
    sub->add_option("--tol", config.tol, "Root/quadrature tolerance")
        ->check(CLI::PositiveNumber);
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "tsv"}));
    sub->add_option("--out", config.out, "Write output to this file (atomically)");
  };

  auto* analyze = app.add_subcommand("analyze", "Index report for one curve");
  add_source_flags(analyze, false);
  auto* curve = app.add_subcommand("curve", "Plot-ready samples of L, 1 - L and disparity");
  add_source_flags(curve, false);
  curve->add_option("--points", config.points, "Grid size (>= 2)");
  auto* compare = app.add_subcommand("compare", "Rank several curves by each index");
  add_source_flags(compare, true);
  auto* verify = app.add_subcommand("verify", "Run the invariant suites");
  verify->add_option("--suite", config.suites,
                     "ordering, fixed-point, interval, symmetry-kp, triangle, induced, all");
  verify->add_option("--random", config.random, "Number of random convex curves per suite");
  verify->add_option("--seed", config.seed, "Random seed");
  verify->add_option("--preset", config.presets, "Extra named curve(s) to check");
  verify->add_option("--input", config.inputs, "Extra CSV sample(s) to check");
  verify->add_option("--column", config.column, "Column index (0-based) or header name");
  verify->add_option("--out", config.out, "Write output to this file (atomically)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInputError;
  }
  config.format = format == "tsv" ? Format::tsv : Format::json;

  std::function<int(const RunConfig&, std::ostream&, std::ostream&)> command;
  if (analyze->parsed()) {
    config.subcommand = "analyze";
    command = cmd_analyze;
  } else if (curve->parsed()) {
    config.subcommand = "curve";
    command = cmd_curve;
  } else if (compare->parsed()) {
    config.subcommand = "compare";
    command = cmd_compare;
  } else {
    config.subcommand = "verify";
    command = cmd_verify;
  }

  if (config.out.empty()) return command(config, out, err);
  std::ostringstream buffer;
  const int code = command(config, buffer, err);
  const int written = guarded(
      [&] {
        write_atomically(config.out, buffer.str());
        return kSuccess;
      },
      err);
  return code != kSuccess ? code : written;
}

}  // namespace kolkata::cli
