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

#ifndef PDFF_COST_H_
#define PDFF_COST_H_

#include <Eigen/Core>
#include <nlohmann/json.hpp>

#include "pdff/arm.h"
#include "pdff/policy.h"

namespace pdff {

struct CostWeights {
  double distance = 1e2;
  double comfort = 1.0;
  double acceleration = 1e-5;
  // Comfort term is max(q_final) as written; this switches to max|q_final|.
  bool comfort_uses_magnitude = false;
};

struct CostBreakdown {
  double distance_term = 0.0;      // distance * |x_final - goal|^2
  double comfort_term = 0.0;       // comfort * max over joints of q_final
  double acceleration_term = 0.0;  // sum over grid points of r_t
  double total = 0.0;
};

// Terminal reaching and comfort costs plus the proximally weighted
// acceleration penalty
//   r_t = acceleration * sum_m (M+1-m) qdd_{t,m}^2 / sum_m (M+1-m),
// summed over every grid point of the trajectory.
CostBreakdown EvaluateCost(const Trajectory& trajectory, const Point2& target,
                           const CostWeights& weights = {});

// Plain Euclidean end-effector distance for a static posture.
double StaticDistanceCost(const ArmModel& arm,
                          const Eigen::Ref<const Eigen::VectorXd>& joint_angles,
                          const Point2& target);

void to_json(nlohmann::json& j, const CostBreakdown& cost);

}  // namespace pdff

#endif  // PDFF_COST_H_
