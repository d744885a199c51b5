#include <gtest/gtest.h>

#include <cmath>

#include "fuzzynav/inference.hpp"
#include "generators.hpp"
#include "oracles.hpp"

namespace fuzzynav {
namespace {

LinguisticVariable variable_for(const gen::RandomCurve& c, double shift = 0.0) {
  LinguisticVariable var{"out", {c.lo + shift, c.hi + shift}, {}};
  for (std::size_t i = 0; i < c.clips.size(); ++i) {
    const auto& t = c.clips[i].tri;
    var.terms.push_back({"T" + std::to_string(i),
                         TriangularMf(t.a + shift, t.m + shift, t.b + shift)});
  }
  return var;
}

std::vector<FiredConsequent> fired_for(const gen::RandomCurve& c) {
  std::vector<FiredConsequent> fired;
  for (std::size_t i = 0; i < c.clips.size(); ++i) {
    fired.push_back({"T" + std::to_string(i), c.clips[i].height});
  }
  return fired;
}

TEST(DefuzzCentroid, SymmetricTriangleGivesApex) {
  const LinguisticVariable var{"v", {0.0, 10.0}, {{"A", TriangularMf(2.0, 3.5, 5.0)}}};
  for (double h : {1.0, 0.6, 0.1}) {
    const std::vector<FiredConsequent> fired{{"A", h}};
    EXPECT_NEAR(defuzz_centroid(aggregate(var, fired)).value, 3.5, 1e-9) << h;
  }
}

TEST(DefuzzCentroid, TwoEqualTrianglesGiveMidpoint) {
  const LinguisticVariable var{"v",
                               {0.0, 10.0},
                               {{"A", TriangularMf(0.5, 1.5, 2.5)},
                                {"B", TriangularMf(6.0, 7.0, 8.0)}}};
  const std::vector<FiredConsequent> fired{{"A", 0.4}, {"B", 0.4}};
  EXPECT_NEAR(defuzz_centroid(aggregate(var, fired)).value, (1.5 + 7.0) / 2,
              1e-9);
}

TEST(DefuzzCentroid, ClippedRightShoulder) {
  // clipped at h: trapezoid from 1 to 2 with the ramp cut at 1 + h
  const LinguisticVariable var{"v", {0.0, 2.0}, {{"F", TriangularMf(1.0, 2.0, 2.0)}}};
  const double h = 0.5;
  const std::vector<FiredConsequent> fired{{"F", h}};
  // ramp [1, 1.5] area 0.125 centroid 1 + 2/3 * 0.5; flat [1.5, 2] area 0.25
  const double expected = (0.125 * (1.0 + 1.0 / 3.0) + 0.25 * 1.75) / 0.375;
  EXPECT_NEAR(defuzz_centroid(aggregate(var, fired)).value, expected, 1e-12);
}

TEST(DefuzzCentroid, MatchesRectangleRuleOracle) {
  gen::Rng rng(424242);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const gen::RandomCurve c = gen::random_curve(rng);
    const double got =
        defuzz_centroid(aggregate(variable_for(c), fired_for(c))).value;
    const double expected = oracle::rectangle_centroid(c.clips, c.lo, c.hi);
    worst = std::max(worst, std::abs(got - expected));
    EXPECT_NEAR(got, expected, 1e-6) << "trial " << trial;
  }
  RecordProperty("worst_abs_error", std::to_string(worst));
}

TEST(DefuzzCentroid, TranslationMovesCentroid) {
  gen::Rng rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const gen::RandomCurve c = gen::random_curve(rng);
    const double shift = rng.uniform(-30.0, 30.0);
    const double base =
        defuzz_centroid(aggregate(variable_for(c), fired_for(c))).value;
    const double moved =
        defuzz_centroid(aggregate(variable_for(c, shift), fired_for(c))).value;
    EXPECT_NEAR(moved, base + shift, 1e-9);
  }
}

TEST(DefuzzCentroid, EmptyAggregationFallsBackToMidpoint) {
  const LinguisticVariable var{"v", {0.0, 2.0}, {{"S", TriangularMf(0.0, 0.0, 1.0)}}};
  const CentroidResult r = defuzz_centroid(aggregate(var, {}));
  EXPECT_TRUE(r.zero_area);
  EXPECT_DOUBLE_EQ(r.value, 1.0);
}

TEST(DefuzzCentroid, UniformGridOnlyIsClose) {
  gen::Rng rng(31);
  CentroidOptions grid_only;
  grid_only.include_vertices = false;
  for (int trial = 0; trial < 50; ++trial) {
    const gen::RandomCurve c = gen::random_curve(rng);
    const AggregatedOutput agg = aggregate(variable_for(c), fired_for(c));
    const double exact = defuzz_centroid(agg).value;
    const double approx = defuzz_centroid(agg, grid_only).value;
    EXPECT_NEAR(approx, exact, 1e-3 * (c.hi - c.lo));
  }
}

TEST(DefuzzCentroid, StaysInsideUniverse) {
  gen::Rng rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    const gen::RandomCurve c = gen::random_curve(rng);
    const double v = defuzz_centroid(aggregate(variable_for(c), fired_for(c))).value;
    EXPECT_GE(v, c.lo);
    EXPECT_LE(v, c.hi);
  }
}

}  // namespace
}  // namespace fuzzynav
