// Copyright 2026 The PDFF Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pdff/analysis.h"

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "pdff/csv.h"

namespace pdff {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(StaticCostTest, DistanceAndComfortVariants) {
  const ArmModel arm = ArmModel::FromMorphology(Morphology::kHuman);
  Eigen::VectorXd q = Eigen::VectorXd::Zero(6);
  EXPECT_EQ(StaticCost(arm, q, {1, 0}, {}), 0.0);
  q[0] = kPi / 10;
  const double chord = 2 * std::sin(kPi / 20);
  EXPECT_NEAR(StaticCost(arm, q, {1, 0}, {}), chord, 1e-14);
  EXPECT_NEAR(StaticCost(arm, q, {1, 0}, {.include_comfort = true}),
              100 * chord * chord + kPi / 10, 1e-12);
  q[0] = -0.4;
  q[3] = -0.1;
  // Signed maximum: all angles non-positive, so the comfort term is 0.
  const double d = StaticCost(arm, q, {0.5, 0.5}, {});
  EXPECT_NEAR(StaticCost(arm, q, {0.5, 0.5}, {.include_comfort = true}),
              100 * d * d, 1e-12);
}

// For the stretched arm and target (1, 0), bending joint m swings the distal
// chain of length L_m on a circle: the tip moves by 2 sin(phi / 2) L_m.
TEST(SensitivityTest, ChordOracleOnStretchedArm) {
  for (Morphology morph : AllMorphologies()) {
    const ArmModel arm = ArmModel::FromMorphology(morph);
    const SensitivityReport r = Sensitivity(arm, TargetSet{{{1.0, 0.0}}});
    double distal = 1.0;
    for (int m = 0; m < 6; ++m) {
      EXPECT_NEAR(r.per_joint[m], 2 * std::sin(kPi / 20) * distal, 1e-14);
      distal -= arm.link_lengths()[m];
    }
  }
}

TEST(SensitivityTest, FrozenEquidistantValues) {
  const SensitivityReport r =
      Sensitivity(ArmModel::FromMorphology(Morphology::kEquidistant),
                  TargetSet{{{0.0, 0.85}}});
  const double expected[] = {0.21828732762470904, 0.18499623564510825,
                             0.15031824362571733, 0.11437377681051664,
                             0.07727339689946144, 0.03911813827900157};
  for (int m = 0; m < 6; ++m) EXPECT_NEAR(r.per_joint[m], expected[m], 1e-12);
}

// Joint 1 rotates the whole stretched arm rigidly about the base.
TEST(SensitivityTest, ProximalJointIsRigidRotation) {
  const TargetSet targets = DefaultTargets();
  double expected = 0.0;
  const Point2 tip0(1, 0);
  const Point2 tip1(std::cos(kPi / 10), std::sin(kPi / 10));
  for (const Point2& g : targets.targets) {
    expected += std::abs((tip1 - g).norm() - (tip0 - g).norm());
  }
  expected /= targets.size();
  for (Morphology morph : AllMorphologies()) {
    const SensitivityReport r =
        Sensitivity(ArmModel::FromMorphology(morph), targets);
    EXPECT_NEAR(r.per_joint[0], expected, 1e-12);
  }
}

TEST(SensitivityTest, MonotoneForEveryMorphology) {
  for (Morphology morph : AllMorphologies()) {
    const SensitivityReport r =
        Sensitivity(ArmModel::FromMorphology(morph), DefaultTargets());
    for (int m = 0; m + 1 < 6; ++m) {
      EXPECT_GT(r.per_joint[m], r.per_joint[m + 1]) << MorphologyName(morph);
    }
  }
}

TEST(MedianTest, OddAndEven) {
  EXPECT_EQ(Median({3, 1, 2}), 2.0);
  EXPECT_EQ(Median({4, 1, 3, 2}), 2.5);
  EXPECT_THROW(Median({}), std::invalid_argument);
}

TEST(InteractionTest, ShapeAndRange) {
  InteractionOptions options;
  options.samples_per_target = 20;
  const InteractionReport r = InteractionRatios(
      ArmModel::FromMorphology(Morphology::kHuman), DefaultTargets(), options, 3);
  ASSERT_EQ(r.pairs.size(), 15u);
  EXPECT_EQ(r.pairs.front().proximal, 1);
  EXPECT_EQ(r.pairs.front().distal, 2);
  EXPECT_EQ(r.pairs.back().proximal, 5);
  EXPECT_EQ(r.pairs.back().distal, 6);
  std::vector<double> ratios;
  for (const JointPair& p : r.pairs) {
    EXPECT_GE(p.ratio, 0.0);
    EXPECT_LE(p.ratio, 1.0);
    ratios.push_back(p.ratio);
  }
  EXPECT_EQ(r.median, Median(ratios));
  EXPECT_EQ(r.Ratio(2, 4), r.pairs[6].ratio);
  EXPECT_THROW(r.Ratio(4, 2), std::out_of_range);
}

TEST(InteractionTest, FrozenDistalJointMeansNoInteraction) {
  InteractionOptions options;
  options.samples_per_target = 30;
  options.distal_sigma = 0.0;
  const InteractionReport r = InteractionRatios(
      ArmModel::FromMorphology(Morphology::kEquidistant), DefaultTargets(),
      options, 1);
  for (const JointPair& p : r.pairs) EXPECT_EQ(p.ratio, 1.0);
}

TEST(InteractionTest, ReproducibleAndConverging) {
  const ArmModel arm = ArmModel::FromMorphology(Morphology::kHuman);
  InteractionOptions small;
  const InteractionReport a = InteractionRatios(arm, DefaultTargets(), small, 7);
  const InteractionReport b = InteractionRatios(arm, DefaultTargets(), small, 7);
  for (size_t i = 0; i < a.pairs.size(); ++i) {
    EXPECT_EQ(a.pairs[i].ratio, b.pairs[i].ratio);
  }
  InteractionOptions large;
  large.samples_per_target = 1000;
  const InteractionReport c = InteractionRatios(arm, DefaultTargets(), large, 7);
  EXPECT_LT(std::abs(a.median - c.median), 0.05);
  // The base joint barely changes which fingertip posture is better.
  EXPECT_GE(c.Ratio(1, 6), 0.9);
}

TEST(InteractionTest, RejectsZeroSamples) {
  InteractionOptions options;
  options.samples_per_target = 0;
  EXPECT_THROW(InteractionRatios(ArmModel::FromMorphology(Morphology::kHuman),
                                 DefaultTargets(), options, 0),
               std::invalid_argument);
}

TEST(AnalysisCsvTest, Layout) {
  const std::string dir = ::testing::TempDir();
  std::vector<SensitivityReport> sens;
  std::vector<std::string> labels;
  for (Morphology morph : AllMorphologies()) {
    labels.emplace_back(MorphologyName(morph));
    sens.push_back(Sensitivity(ArmModel::FromMorphology(morph), DefaultTargets()));
  }
  WriteSensitivityCsv(labels, sens, dir + "sens.csv");
  const CsvTable table = ReadCsv(dir + "sens.csv");
  ASSERT_EQ(table.rows.size(), 3u);
  EXPECT_EQ(table.header.size(), 7u);
  EXPECT_EQ(table.rows[1][0], "equidistant");
  EXPECT_EQ(table.Number(2, "joint_6"), sens[2].per_joint[5]);
  std::remove((dir + "sens.csv").c_str());
}

}  // namespace
}  // namespace pdff
