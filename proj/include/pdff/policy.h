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

#ifndef PDFF_POLICY_H_
#define PDFF_POLICY_H_

#include <string>
#include <vector>

#include <Eigen/Core>

#include "pdff/arm.h"

namespace pdff {

// Normalized Gaussian kernels with centers spaced equidistantly over
// [0, duration], first center at 0 and last at duration.
class BasisFunctionSet {
 public:
  BasisFunctionSet(int num_basis = 5, double width = 0.05,
                   double duration = 0.5);

  int size() const { return static_cast<int>(centers_.size()); }
  double width() const { return width_; }
  double duration() const { return duration_; }
  const Eigen::VectorXd& centers() const { return centers_; }

  // Normalized activations at time t, a simplex vector. Throws
  // std::invalid_argument when t is outside [0, duration].
  Eigen::VectorXd Activations(double t) const;

 private:
  Eigen::VectorXd centers_;
  double width_;
  double duration_;
};

// One weight vector per joint, stored row-wise: weights(m, b).
struct Policy {
  Eigen::MatrixXd weights;

  static Policy Zero(int num_joints, int num_basis) {
    return {Eigen::MatrixXd::Zero(num_joints, num_basis)};
  }
  int num_joints() const { return static_cast<int>(weights.rows()); }
  int num_basis() const { return static_cast<int>(weights.cols()); }
};

// Time-major joint trajectories: row i is grid point t_i = i * dt.
struct Trajectory {
  Eigen::VectorXd time;
  Eigen::MatrixXd accelerations;
  Eigen::MatrixXd velocities;
  Eigen::MatrixXd angles;
  std::vector<Point2> end_effector;

  int num_points() const { return static_cast<int>(time.size()); }
  Eigen::VectorXd final_angles() const {
    return angles.row(angles.rows() - 1).transpose();
  }
  const Point2& final_end_effector() const { return end_effector.back(); }
};

// Number of integration steps for the given dt; throws if dt does not
// divide the duration.
int NumSteps(double duration, double dt);

// Activation matrix sampled on the rollout grid, (N+1) x B. Rows are
// simplex vectors; accelerations are activations * weights^T.
Eigen::MatrixXd ActivationGrid(const BasisFunctionSet& basis, double dt);

// Accelerations from the basis expansion on every grid point (including the
// final one), explicit Euler integration from rest, and forward kinematics.
Trajectory Rollout(const ArmModel& arm, const BasisFunctionSet& basis,
                   const Policy& policy, double dt);

// Same, with a precomputed ActivationGrid for hot loops.
Trajectory Rollout(const ArmModel& arm, const Eigen::MatrixXd& activation_grid,
                   const Policy& policy, double dt);

// Columns: t, q_1..q_M, x, y.
void WriteTrajectoryCsv(const Trajectory& trajectory, const std::string& path);

}  // namespace pdff

#endif  // PDFF_POLICY_H_
