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

#include "pdff/policy.h"

#include <cmath>
#include <stdexcept>
#include <string>

#include "pdff/csv.h"

namespace pdff {

BasisFunctionSet::BasisFunctionSet(int num_basis, double width,
                                   double duration)
    : width_(width), duration_(duration) {
  if (num_basis < 1) throw std::invalid_argument("num_basis must be >= 1");
  if (!(width > 0.0)) throw std::invalid_argument("basis width must be > 0");
  if (!(duration > 0.0)) throw std::invalid_argument("duration must be > 0");
  if (num_basis == 1) {
    centers_ = Eigen::VectorXd::Constant(1, 0.5 * duration);
  } else {
    centers_ = Eigen::VectorXd::LinSpaced(num_basis, 0.0, duration);
  }
}

Eigen::VectorXd BasisFunctionSet::Activations(double t) const {
  if (!(t >= 0.0 && t <= duration_)) {
    throw std::invalid_argument("t = " + std::to_string(t) +
                                " outside [0, duration]");
  }
  // Shift exponents by their maximum so the largest kernel is exactly 1.
  Eigen::ArrayXd exponent =
      -(t - centers_.array()).square() / (width_ * width_);
  Eigen::ArrayXd kernel = (exponent - exponent.maxCoeff()).exp();
  return (kernel / kernel.sum()).matrix();
}

int NumSteps(double duration, double dt) {
  if (!(dt > 0.0)) throw std::invalid_argument("dt must be > 0");
  const double ratio = duration / dt;
  const double steps = std::round(ratio);
  if (steps < 1.0 || std::abs(ratio - steps) > 1e-9 * std::max(1.0, ratio)) {
    throw std::invalid_argument("dt must divide the movement duration");
  }
  return static_cast<int>(steps);
}

Eigen::MatrixXd ActivationGrid(const BasisFunctionSet& basis, double dt) {
  const int steps = NumSteps(basis.duration(), dt);
  Eigen::MatrixXd grid(steps + 1, basis.size());
  for (int i = 0; i <= steps; ++i) {
    const double t = std::min(i * dt, basis.duration());
    grid.row(i) = basis.Activations(t).transpose();
  }
  return grid;
}

Trajectory Rollout(const ArmModel& arm, const BasisFunctionSet& basis,
                   const Policy& policy, double dt) {
  return Rollout(arm, ActivationGrid(basis, dt), policy, dt);
}

Trajectory Rollout(const ArmModel& arm, const Eigen::MatrixXd& activation_grid,
                   const Policy& policy, double dt) {
  if (policy.num_joints() != arm.num_joints()) {
    throw std::invalid_argument("policy joint count does not match arm");
  }
  if (policy.num_basis() != activation_grid.cols()) {
    throw std::invalid_argument("policy basis count does not match grid");
  }
  const Eigen::Index points = activation_grid.rows();
  Trajectory traj;
  traj.time = Eigen::VectorXd::LinSpaced(points, 0.0, dt * (points - 1));
  traj.accelerations = activation_grid * policy.weights.transpose();
  traj.velocities = Eigen::MatrixXd::Zero(points, arm.num_joints());
  traj.angles = Eigen::MatrixXd::Zero(points, arm.num_joints());
  for (Eigen::Index i = 0; i + 1 < points; ++i) {
    traj.velocities.row(i + 1) =
        traj.velocities.row(i) + dt * traj.accelerations.row(i);
    traj.angles.row(i + 1) = traj.angles.row(i) + dt * traj.velocities.row(i);
  }
  traj.end_effector.reserve(points);
  for (Eigen::Index i = 0; i < points; ++i) {
    traj.end_effector.push_back(
        EndEffector(arm, traj.angles.row(i).transpose()));
  }
  return traj;
}

void WriteTrajectoryCsv(const Trajectory& trajectory, const std::string& path) {
  const int joints = static_cast<int>(trajectory.angles.cols());
  std::vector<std::string> header = {"t"};
  for (int m = 1; m <= joints; ++m) header.push_back("q" + std::to_string(m));
  header.push_back("x");
  header.push_back("y");
  CsvWriter csv(path, header);
  for (int i = 0; i < trajectory.num_points(); ++i) {
    std::vector<double> row = {trajectory.time[i]};
    for (int m = 0; m < joints; ++m) row.push_back(trajectory.angles(i, m));
    row.push_back(trajectory.end_effector[i].x());
    row.push_back(trajectory.end_effector[i].y());
    csv.Row(row);
  }
}

}  // namespace pdff
