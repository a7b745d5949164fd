#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "kolkata/analysis.hpp"
#include "kolkata/presets.hpp"

namespace {

using kolkata::IndexKind;
using kolkata::LabeledCurve;
using kolkata::LorenzCurve;

const double kGoldenNormalizedK = 2.0 / std::numbers::phi - 1.0;

TEST(Symmetry, KnownCurves) {
  EXPECT_TRUE(kolkata::is_symmetric(kolkata::CircularQuadrant{}));
  EXPECT_TRUE(kolkata::is_symmetric(LorenzCurve::identity()));
  EXPECT_TRUE(kolkata::is_symmetric(kolkata::TwoPieceK{0.7}));
  EXPECT_FALSE(kolkata::is_symmetric(kolkata::preset("lf10")));
  EXPECT_FALSE(kolkata::is_symmetric(kolkata::Uniform{0.0, 1.0}));
}

TEST(CheckKp, CircularCoincides) {
  const auto report = kolkata::check_kp(kolkata::CircularQuadrant{});
  EXPECT_TRUE(report.kp_coincides);
  EXPECT_TRUE(report.symmetric);
  EXPECT_NEAR(report.k, std::numbers::sqrt2 / 2.0, 1e-9);
  EXPECT_NEAR(report.pietra_argmax, std::numbers::sqrt2 / 2.0, 1e-6);
  EXPECT_FALSE(report.gk_coincides);
}

TEST(CheckKp, AsymmetricCurveStillCoincides) {
  const auto report = kolkata::check_kp(kolkata::preset("lf10"));
  EXPECT_FALSE(report.symmetric);
  EXPECT_TRUE(report.kp_coincides);
}

TEST(CheckKp, OligarchyDoesNot) {
  const auto report = kolkata::check_kp(kolkata::Oligarchy{0.5});
  EXPECT_FALSE(report.kp_coincides);
  EXPECT_NEAR(report.pietra_argmax, 0.5, 1e-12);
  EXPECT_NEAR(report.k, 2.0 / 3.0, 1e-12);
}

TEST(CheckKp, EgalitarianPlateau) {
  const auto report = kolkata::check_kp(LorenzCurve::identity());
  EXPECT_TRUE(report.kp_coincides);
  EXPECT_TRUE(report.all_coincide);
}

TEST(CoincidenceFamily, IndicesAllEqualTwoKMinusOne) {
  for (double k : {0.5, 0.6, 0.7, 0.75, 0.9}) {
    const auto report = kolkata::check_kp(kolkata::coincidence_family(k));
    EXPECT_NEAR(report.gini, 2.0 * k - 1.0, 1e-12) << k;
    EXPECT_NEAR(report.pietra, 2.0 * k - 1.0, 1e-12) << k;
    EXPECT_NEAR(report.normalized_k, 2.0 * k - 1.0, 1e-12) << k;
    EXPECT_TRUE(report.all_coincide) << k;
  }
}

TEST(CoincidenceFamily, HalfIsIdentity) {
  const auto curve = kolkata::coincidence_family(0.5);
  for (double p : {0.1, 0.5, 0.9}) EXPECT_NEAR(curve(p), p, 1e-15);
}

TEST(CoincidenceFamily, RejectsOutOfRange) {
  EXPECT_THROW((void)kolkata::coincidence_family(0.4), std::domain_error);
  EXPECT_THROW((void)kolkata::coincidence_family(1.0), std::domain_error);
}

TEST(DetectFamily, Members) {
  const auto match = kolkata::detect_coincidence_family(kolkata::TwoPieceK{0.7});
  EXPECT_TRUE(match.member);
  EXPECT_TRUE(match.indices_coincide);
  EXPECT_FALSE(match.inconsistent());
}

TEST(DetectFamily, NonMembers) {
  const auto circular = kolkata::detect_coincidence_family(kolkata::CircularQuadrant{});
  EXPECT_FALSE(circular.member);
  EXPECT_FALSE(circular.indices_coincide);
  EXPECT_FALSE(circular.inconsistent());
  const auto oligarchy = kolkata::detect_coincidence_family(kolkata::Oligarchy{0.3});
  EXPECT_FALSE(oligarchy.member);
  EXPECT_FALSE(oligarchy.inconsistent());
}

TEST(DetectFamily, DeviationStaysWithinBoundForPresets) {
  for (const auto& name : kolkata::preset_names()) {
    const auto match = kolkata::detect_coincidence_family(kolkata::preset(name));
    EXPECT_FALSE(match.inconsistent()) << name << " deviation " << match.max_deviation
                                       << " bound " << match.deviation_bound;
  }
}

TEST(InducedLorenz, UniformAtHalf) {
  const auto chord = kolkata::induced_lorenz(kolkata::Uniform{0.0, 1.0}, 0.5);
  const auto* vertices = chord.piecewise();
  ASSERT_NE(vertices, nullptr);
  EXPECT_DOUBLE_EQ(vertices->slope(0), 0.5);
  EXPECT_DOUBLE_EQ(vertices->slope(1), 1.5);
  EXPECT_NEAR(kolkata::gini(chord), 0.25, 1e-15);
}

TEST(InducedLorenz, AtKHasGiniEqualToNormalizedK) {
  for (const auto& name : {"exp1", "pareto8020", "circular", "lf4"}) {
    const auto curve = kolkata::preset(name);
    const double k = kolkata::k_index(curve);
    EXPECT_NEAR(kolkata::gini(kolkata::induced_lorenz(curve, k)), 2.0 * k - 1.0, 1e-10) << name;
  }
}

TEST(InducedLorenz, EgalitarianChordIsIdentity) {
  const auto chord = kolkata::induced_lorenz(LorenzCurve::identity(), 0.3);
  for (double p : {0.1, 0.3, 0.8}) EXPECT_NEAR(chord(p), p, 1e-15);
}

TEST(InducedLorenz, RejectsEndpoints) {
  EXPECT_THROW((void)kolkata::induced_lorenz(LorenzCurve::identity(), 0.0), std::domain_error);
  EXPECT_THROW((void)kolkata::induced_lorenz(LorenzCurve::identity(), 1.0), std::domain_error);
}

TEST(TriangleAreas, UniformClosedForm) {
  // L = p^2: below = k^3 - k^3/3, above = (1 - k^3)/3 - (1 - k) k^2.
  const auto areas = kolkata::triangle_areas(kolkata::Uniform{0.0, 1.0});
  const double k = areas.k;
  EXPECT_NEAR(areas.below, 2.0 * k * k * k / 3.0, 1e-10);
  EXPECT_NEAR(areas.above, (1.0 - k * k * k) / 3.0 - (1.0 - k) * k * k, 1e-10);
  EXPECT_GE(areas.below, areas.triangle);
  EXPECT_LE(areas.above, areas.triangle);
}

TEST(TriangleAreas, CoincidenceFamilyIsTight) {
  const auto areas = kolkata::triangle_areas(kolkata::TwoPieceK{0.8});
  EXPECT_NEAR(areas.below, areas.triangle, 1e-15);
  EXPECT_NEAR(areas.above, areas.triangle, 1e-15);
}

TEST(Rank, PiecewiseExamplesTieOnKAndSplitOnPietra) {
  const std::vector<LabeledCurve> curves{{"lf1", kolkata::preset("lf1")},
                                         {"lf2", kolkata::preset("lf2")}};
  const auto table = kolkata::rank(curves);
  ASSERT_EQ(table.reports.size(), 2u);
  EXPECT_NEAR(table.reports[0].second.k, 9.0 / 17.0, 1e-12);
  EXPECT_NEAR(table.reports[1].second.k, 9.0 / 17.0, 1e-12);

  const auto& by_k = table.orderings[0];
  ASSERT_EQ(by_k.index, IndexKind::normalized_k);
  EXPECT_EQ(by_k.entries[0].rank, 1u);
  EXPECT_EQ(by_k.entries[1].rank, 1u);

  const auto& by_pietra = table.orderings[1];
  ASSERT_EQ(by_pietra.index, IndexKind::pietra);
  EXPECT_EQ(by_pietra.entries[0].label, "lf2");
  EXPECT_EQ(by_pietra.entries[1].rank, 2u);
  EXPECT_TRUE(table.discordant());
}

TEST(Rank, ContinuousExamplesTieOnKAndSplitOnGini) {
  const std::vector<LabeledCurve> curves{{"lf3", kolkata::preset("lf3")},
                                         {"lf4", kolkata::preset("lf4")}};
  const auto table = kolkata::rank(curves);
  EXPECT_NEAR(table.reports[0].second.normalized_k, kGoldenNormalizedK, 1e-9);
  EXPECT_NEAR(table.reports[1].second.normalized_k, kGoldenNormalizedK, 1e-9);
  const auto& by_gini = table.orderings[2];
  ASSERT_EQ(by_gini.index, IndexKind::gini);
  EXPECT_EQ(by_gini.entries[0].label, "lf3");
  EXPECT_EQ(by_gini.entries[1].label, "lf4");
  EXPECT_TRUE(table.discordant());
}

TEST(Rank, IdenticalCurvesTieEverywhere) {
  const std::vector<LabeledCurve> curves{{"a", LorenzCurve::identity()},
                                         {"b", LorenzCurve::identity()}};
  const auto table = kolkata::rank(curves);
  for (const auto& ordering : table.orderings) {
    for (const auto& entry : ordering.entries) EXPECT_EQ(entry.rank, 1u);
  }
  EXPECT_FALSE(table.discordant());
}

TEST(Rank, LabelsInvalidInput) {
  const std::vector<LabeledCurve> curves{{"good", LorenzCurve::identity()},
                                         {"bad", kolkata::preset("nonconvex")}};
  try {
    (void)kolkata::rank(curves);
    FAIL() << "expected ValidationError";
  } catch (const kolkata::ValidationError& e) {
    EXPECT_EQ(std::string(e.what()).rfind("bad: ", 0), 0u) << e.what();
  }
}

TEST(Rank, NeedsTwoCurves) {
  const std::vector<LabeledCurve> one{{"a", LorenzCurve::identity()}};
  EXPECT_THROW((void)kolkata::rank(one), std::invalid_argument);
}

}  // namespace
