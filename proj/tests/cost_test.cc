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

#include "pdff/cost.h"

#include <numbers>
#include <random>

#include <gtest/gtest.h>

namespace pdff {
namespace {

Trajectory StillTrajectory() {
  return Rollout(ArmModel::FromMorphology(Morphology::kHuman), BasisFunctionSet(),
                 Policy::Zero(6, 5), 0.01);
}

Policy RandomPolicy(std::mt19937_64& rng, double scale) {
  std::normal_distribution<double> normal(0.0, scale);
  Policy p = Policy::Zero(6, 5);
  for (int m = 0; m < 6; ++m)
    for (int b = 0; b < 5; ++b) p.weights(m, b) = normal(rng);
  return p;
}

TEST(CostTest, StretchedArmTowardIllustrativeTarget) {
  const CostBreakdown cost = EvaluateCost(StillTrajectory(), {0.0, 0.85});
  EXPECT_NEAR(cost.distance_term, 172.25, 1e-10);
  EXPECT_EQ(cost.comfort_term, 0.0);
  EXPECT_EQ(cost.acceleration_term, 0.0);
  EXPECT_NEAR(cost.total, 172.25, 1e-10);
}

TEST(CostTest, TargetAtFinalPositionGivesZeroDistance) {
  Trajectory traj = StillTrajectory();
  traj.angles.bottomRows(1).setConstant(-0.1);
  traj.end_effector.back() = Point2(0.3, 0.4);
  const CostBreakdown cost = EvaluateCost(traj, {0.3, 0.4});
  EXPECT_EQ(cost.distance_term, 0.0);
  EXPECT_LE(cost.comfort_term, 0.0);
}

TEST(CostTest, ConstantShoulderAcceleration) {
  Trajectory traj = StillTrajectory();
  traj.accelerations.setZero();
  traj.accelerations.col(0).setOnes();
  const CostBreakdown cost = EvaluateCost(traj, {1.0, 0.0});
  EXPECT_NEAR(cost.acceleration_term, 51 * 1e-5 * 6.0 / 21.0, 1e-18);
  EXPECT_NEAR(cost.acceleration_term, 1.4571428571428572e-4, 1e-15);
}

TEST(CostTest, ProximalJointsCostMore) {
  for (int m = 0; m < 6; ++m) {
    Trajectory traj = StillTrajectory();
    traj.accelerations.setZero();
    traj.accelerations.col(m).setOnes();
    EXPECT_NEAR(EvaluateCost(traj, {1, 0}).acceleration_term,
                51 * 1e-5 * (6.0 - m) / 21.0, 1e-18);
  }
}

TEST(CostTest, ComfortIsSignedMaximumUnlessConfigured) {
  Trajectory traj = StillTrajectory();
  traj.angles.bottomRows(1) << -0.7, 0.2, -0.1, 0.0, 0.1, -0.3;
  EXPECT_DOUBLE_EQ(EvaluateCost(traj, {1, 0}).comfort_term, 0.2);
  CostWeights magnitude;
  magnitude.comfort_uses_magnitude = true;
  EXPECT_DOUBLE_EQ(EvaluateCost(traj, {1, 0}, magnitude).comfort_term, 0.7);
}

TEST(CostTest, BreakdownProperties) {
  const ArmModel arm = ArmModel::FromMorphology(Morphology::kHuman);
  const BasisFunctionSet basis;
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const Policy policy = RandomPolicy(rng, 3.0);
    const Trajectory traj = Rollout(arm, basis, policy, 0.01);
    const CostBreakdown cost = EvaluateCost(traj, {0.2, 0.7});
    EXPECT_NEAR(cost.total,
                cost.distance_term + cost.comfort_term + cost.acceleration_term,
                1e-12);
    EXPECT_GE(cost.distance_term, 0.0);
    EXPECT_GE(cost.acceleration_term, 0.0);

    // Quadratic in the policy scale.
    const double a = 2.5;
    const CostBreakdown scaled =
        EvaluateCost(Rollout(arm, basis, Policy{a * policy.weights}, 0.01),
                     {0.2, 0.7});
    EXPECT_NEAR(scaled.acceleration_term, a * a * cost.acceleration_term, 1e-10);

    // Without the distance weight the target is irrelevant.
    CostWeights no_distance;
    no_distance.distance = 0.0;
    EXPECT_EQ(EvaluateCost(traj, {0.2, 0.7}, no_distance).total,
              EvaluateCost(traj, {-0.5, 0.1}, no_distance).total);
  }
}

TEST(CostTest, DecreasesWithDistance) {
  Trajectory traj = StillTrajectory();
  double previous = 1e9;
  for (double y : {0.9, 0.6, 0.3, 0.1, 0.0}) {
    const double total = EvaluateCost(traj, {1.0, y}).total;
    EXPECT_LT(total, previous);
    previous = total;
  }
}

TEST(CostTest, EmptyTrajectoryThrows) {
  EXPECT_THROW(EvaluateCost(Trajectory{}, {0, 0}), std::invalid_argument);
}

TEST(StaticDistanceTest, Examples) {
  const ArmModel arm = ArmModel::FromMorphology(Morphology::kHuman);
  Eigen::VectorXd q = Eigen::VectorXd::Zero(6);
  EXPECT_NEAR(StaticDistanceCost(arm, q, {1.0, 0.0}), 0.0, 1e-15);
  EXPECT_NEAR(StaticDistanceCost(arm, q, {0.0, 0.85}), 1.3124404748406686, 1e-12);
  q[0] = std::numbers::pi / 10;
  EXPECT_NEAR(StaticDistanceCost(arm, q, {0.0, 0.85}), 1.0941531472159596, 1e-12);
  EXPECT_THROW(StaticDistanceCost(arm, Eigen::VectorXd::Zero(3), {0, 0}),
               std::invalid_argument);
}

TEST(CostJsonTest, NamedFields) {
  const nlohmann::json j = EvaluateCost(StillTrajectory(), {0.0, 0.85});
  EXPECT_DOUBLE_EQ(j.at("distance_term").get<double>(), 172.25);
  EXPECT_EQ(j.at("comfort_term").get<double>(), 0.0);
  EXPECT_EQ(j.at("acceleration_term").get<double>(), 0.0);
  EXPECT_DOUBLE_EQ(j.at("total").get<double>(), 172.25);
}

}  // namespace
}  // namespace pdff
