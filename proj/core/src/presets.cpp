#include "kolkata/presets.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace kolkata {

namespace {

double parse_parameter(std::string_view name, std::string_view text, double fallback) {
  if (text.empty()) return fallback;
  double value = 0.0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size()) {
    throw ValidationError("preset '" + std::string(name) + "' has a malformed parameter '" +
                          std::string(text) + "'");
  }
  return value;
}

LorenzCurve lf1() {
  // 3p/4 on [0, 1/3], (9p - 1)/8 after.
  return PiecewiseLinearLorenz({{0.0, 0.0}, {1.0 / 3.0, 0.25}, {1.0, 1.0}});
}

LorenzCurve lf2() {
  // 8p/9 on [0, 7/8], (16p - 7)/9 after.
  return PiecewiseLinearLorenz({{0.0, 0.0}, {7.0 / 8.0, 7.0 / 9.0}, {1.0, 1.0}});
}

LorenzCurve lf4() {
  Segments curve;
  curve.name = "lf4";
  curve.pieces.push_back({0.75, [](double p) { return p * p; }});
  curve.pieces.push_back({1.0, [](double p) { return 1.0 - 1.75 * (1.0 - p); }});
  return curve;
}

LorenzCurve lf10() {
  // The chord from (1/sqrt 2, 1 - 1/sqrt 2) to (1, 1) has slope sqrt 2 + 1.
  constexpr double kink = std::numbers::sqrt2 / 2.0;
  constexpr double chord_slope = std::numbers::sqrt2 + 1.0;
  Segments curve;
  curve.name = "lf10";
  curve.pieces.push_back({kink, [](double p) { return 1.0 - std::sqrt((1.0 - p) * (1.0 + p)); }});
  curve.pieces.push_back({1.0, [](double p) { return 1.0 - chord_slope * (1.0 - p); }});
  return curve;
}

LorenzCurve nonconvex() {
  return PiecewiseLinearLorenz::unchecked(
      {{0.0, 0.0}, {0.5, 0.3}, {0.75, 0.35}, {1.0, 1.0}});
}

}  // namespace

LorenzCurve preset(std::string_view name) {
  const auto colon = name.find(':');
  const auto base = name.substr(0, colon);
  const auto param = colon == std::string_view::npos ? std::string_view{} : name.substr(colon + 1);
  const auto no_param = [&] {
    if (colon != std::string_view::npos) {
      throw ValidationError("preset '" + std::string(base) + "' takes no parameter");
    }
  };

  if (base == "identity" || base == "egalitarian") {
    no_param();
    return LorenzCurve::identity();
  }
  if (base == "uniform01" || base == "lf3") {
    no_param();
    return Uniform{0.0, 1.0};
  }
  if (base == "exp1") {
    no_param();
    return Exponential{1.0};
  }
  if (base == "pareto8020") {
    no_param();
    return Pareto{1.0, std::log(5.0) / std::log(4.0)};
  }
  if (base == "circular") {
    no_param();
    return CircularQuadrant{};
  }
  if (base == "oligarchy") return Oligarchy{parse_parameter(base, param, 0.5)};
  if (base == "twopiece") return TwoPieceK{parse_parameter(base, param, 0.7)};
  if (base == "lf1") return no_param(), lf1();
  if (base == "lf2") return no_param(), lf2();
  if (base == "lf4") return no_param(), lf4();
  if (base == "lf10") return no_param(), lf10();
  if (base == "nonconvex") return no_param(), nonconvex();
  throw std::out_of_range("unknown preset '" + std::string(name) + "'");
}

std::vector<std::string> preset_names() {
  return {"identity", "uniform01",   "exp1", "pareto8020", "circular", "oligarchy:0.5",
          "twopiece:0.7", "lf1",     "lf2",  "lf3",        "lf4",      "lf10"};
}

}  // namespace kolkata
