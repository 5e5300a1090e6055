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

#include <stdexcept>

namespace pdff {

CostBreakdown EvaluateCost(const Trajectory& trajectory, const Point2& target,
                           const CostWeights& weights) {
  if (trajectory.num_points() == 0) {
    throw std::invalid_argument("empty trajectory");
  }
  const Eigen::Index joints = trajectory.accelerations.cols();
  CostBreakdown cost;
  cost.distance_term =
      weights.distance * (trajectory.final_end_effector() - target).squaredNorm();

  const Eigen::VectorXd final_angles = trajectory.final_angles();
  cost.comfort_term =
      weights.comfort * (weights.comfort_uses_magnitude
                             ? final_angles.cwiseAbs().maxCoeff()
                             : final_angles.maxCoeff());

  // Joint m (1-based) gets weight M+1-m.
  const Eigen::VectorXd proximal =
      Eigen::VectorXd::LinSpaced(joints, static_cast<double>(joints), 1.0);
  const Eigen::VectorXd per_step =
      trajectory.accelerations.array().square().matrix() * proximal;
  cost.acceleration_term =
      weights.acceleration * per_step.sum() / proximal.sum();

  cost.total = cost.distance_term + cost.comfort_term + cost.acceleration_term;
  return cost;
}

double StaticDistanceCost(const ArmModel& arm,
                          const Eigen::Ref<const Eigen::VectorXd>& joint_angles,
                          const Point2& target) {
  return (EndEffector(arm, joint_angles) - target).norm();
}

void to_json(nlohmann::json& j, const CostBreakdown& cost) {
  j = nlohmann::json{{"distance_term", cost.distance_term},
                     {"comfort_term", cost.comfort_term},
                     {"acceleration_term", cost.acceleration_term},
                     {"total", cost.total}};
}

}  // namespace pdff
