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

#include "pdff/arm.h"

#include <complex>
#include <filesystem>
#include <numbers>
#include <random>

#include <Eigen/Geometry>
#include <gtest/gtest.h>

#include "pdff/csv.h"

namespace pdff {
namespace {

constexpr double kPi = std::numbers::pi;

// Independent oracle: each link is length * exp(i * cumulative angle).
std::complex<double> ComplexEndEffector(const std::vector<double>& lengths,
                                        const Eigen::VectorXd& angles) {
  std::complex<double> tip = 0.0, heading = 1.0;
  for (size_t m = 0; m < lengths.size(); ++m) {
    heading *= std::polar(1.0, angles[m]);
    tip += lengths[m] * heading;
  }
  return tip;
}

TEST(ArmTest, MorphologiesAreNormalized) {
  for (Morphology m : AllMorphologies()) {
    const ArmModel arm = ArmModel::FromMorphology(m);
    EXPECT_EQ(arm.num_joints(), 6);
    double total = 0;
    for (double l : arm.link_lengths()) {
      EXPECT_GT(l, 0);
      total += l;
    }
    EXPECT_NEAR(total, 1.0, 1e-12);
  }
  const auto human = DefaultLinkLengths(Morphology::kHuman);
  const auto inverted = DefaultLinkLengths(Morphology::kInvertedHuman);
  EXPECT_TRUE(std::equal(human.begin(), human.end(), inverted.rbegin()));
  for (double l : DefaultLinkLengths(Morphology::kEquidistant)) {
    EXPECT_DOUBLE_EQ(l, 1.0 / 6.0);
  }
}

TEST(ArmTest, RejectsInvalidLinks) {
  EXPECT_THROW(ArmModel({}), std::invalid_argument);
  EXPECT_THROW(ArmModel({0.5, 0.6}), std::invalid_argument);
  EXPECT_THROW(ArmModel({1.2, -0.2}), std::invalid_argument);
  EXPECT_NO_THROW(ArmModel({1.0}));
}

TEST(ArmTest, MorphologyNamesRoundTrip) {
  for (Morphology m : AllMorphologies()) {
    EXPECT_EQ(ParseMorphology(MorphologyName(m)), m);
  }
  EXPECT_EQ(ParseMorphology("inverted_human"), Morphology::kInvertedHuman);
  EXPECT_THROW(ParseMorphology("octopus"), std::invalid_argument);
}

TEST(ArmTest, StretchedArmReachesUnitX) {
  for (Morphology m : AllMorphologies()) {
    const ArmPose pose =
        ForwardKinematics(ArmModel::FromMorphology(m), Eigen::VectorXd::Zero(6));
    EXPECT_NEAR(pose.end_effector.x(), 1.0, 1e-12);
    EXPECT_NEAR(pose.end_effector.y(), 0.0, 1e-12);
    ASSERT_EQ(pose.joint_positions.size(), 7u);
    EXPECT_EQ(pose.joint_positions.front(), Point2::Zero());
    EXPECT_EQ(pose.joint_positions.back(), pose.end_effector);
  }
}

TEST(ArmTest, ShoulderRotationRotatesWholeArm) {
  Eigen::VectorXd q = Eigen::VectorXd::Zero(6);
  q[0] = kPi / 10;
  const Point2 tip = EndEffector(ArmModel::FromMorphology(Morphology::kHuman), q);
  EXPECT_NEAR(tip.x(), 0.95105651629515353, 1e-12);
  EXPECT_NEAR(tip.y(), 0.30901699437494740, 1e-12);
}

TEST(ArmTest, AlternatingAnglesMatchComplexOracle) {
  const ArmModel arm = ArmModel::FromMorphology(Morphology::kEquidistant);
  Eigen::VectorXd q(6);
  q << kPi / 4, -kPi / 4, kPi / 4, -kPi / 4, kPi / 4, -kPi / 4;
  const std::complex<double> expected = ComplexEndEffector(arm.link_lengths(), q);
  const Point2 tip = EndEffector(arm, q);
  EXPECT_NEAR(tip.x(), expected.real(), 1e-12);
  EXPECT_NEAR(tip.y(), expected.imag(), 1e-12);
}

TEST(ArmTest, DimensionMismatchThrows) {
  const ArmModel arm = ArmModel::FromMorphology(Morphology::kHuman);
  EXPECT_THROW(ForwardKinematics(arm, Eigen::VectorXd::Zero(5)),
               std::invalid_argument);
  EXPECT_THROW(EndEffector(arm, Eigen::VectorXd::Zero(7)), std::invalid_argument);
}

TEST(ArmTest, RandomAnglesProperties) {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  for (Morphology m : AllMorphologies()) {
    const ArmModel arm = ArmModel::FromMorphology(m);
    for (int trial = 0; trial < 1000; ++trial) {
      Eigen::VectorXd q(6);
      for (int i = 0; i < 6; ++i) q[i] = angle(rng);
      const ArmPose pose = ForwardKinematics(arm, q);
      const std::complex<double> expected =
          ComplexEndEffector(arm.link_lengths(), q);
      ASSERT_NEAR(pose.end_effector.x(), expected.real(), 1e-12);
      ASSERT_NEAR(pose.end_effector.y(), expected.imag(), 1e-12);
      ASSERT_LE(pose.end_effector.norm(), 1.0 + 1e-12);

      // Adding delta to the shoulder rotates the tip by delta.
      const double delta = angle(rng);
      Eigen::VectorXd rotated = q;
      rotated[0] += delta;
      const Point2 expected_tip =
          Eigen::Rotation2Dd(delta) * pose.end_effector;
      const Point2 tip = EndEffector(arm, rotated);
      ASSERT_NEAR(tip.x(), expected_tip.x(), 1e-12);
      ASSERT_NEAR(tip.y(), expected_tip.y(), 1e-12);
    }
  }
}

TEST(TargetsTest, DefaultLayout) {
  const TargetSet targets = DefaultTargets();
  ASSERT_EQ(targets.size(), 20);
  bool has_illustrative = false;
  for (const Point2& t : targets.targets) {
    EXPECT_GE(t.norm(), 0.5);
    EXPECT_LE(t.norm(), 0.95);
    EXPECT_GT(t.y(), 0.0);
    if (t.x() == 0.0 && t.y() == 0.85) has_illustrative = true;
  }
  EXPECT_TRUE(has_illustrative);
  const TargetSet again = DefaultTargets();
  for (int i = 0; i < targets.size(); ++i) {
    EXPECT_EQ(targets.targets[i], again.targets[i]);
  }
}

TEST(TargetsTest, RejectsUnreachableLayouts) {
  TargetLayout far;
  far.outer_radius = 1.2;
  EXPECT_THROW(DefaultTargets(far), std::invalid_argument);
  TargetLayout near;
  near.inner_radius = 0.1;
  EXPECT_THROW(DefaultTargets(near), std::invalid_argument);
  TargetLayout empty;
  empty.points_per_arc = 0;
  EXPECT_THROW(DefaultTargets(empty), std::invalid_argument);
}

TEST(TargetsTest, CsvExport) {
  const std::string path =
      (std::filesystem::temp_directory_path() / "pdff_targets_test.csv").string();
  WriteTargetsCsv(DefaultTargets(), path);
  const CsvTable table = ReadCsv(path);
  EXPECT_EQ(table.header, (std::vector<std::string>{"index", "x", "y"}));
  ASSERT_EQ(table.rows.size(), 20u);
  EXPECT_DOUBLE_EQ(table.Number(5, "x"), 0.0);
  EXPECT_DOUBLE_EQ(table.Number(5, "y"), 0.85);
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace pdff
