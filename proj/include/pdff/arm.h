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

#ifndef PDFF_ARM_H_
#define PDFF_ARM_H_

#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

namespace pdff {

using Point2 = Eigen::Vector2d;

enum class Morphology { kHuman, kEquidistant, kInvertedHuman };

std::string_view MorphologyName(Morphology morphology);
// Accepts "human", "equidistant", "inverted" (or "inverted_human").
Morphology ParseMorphology(std::string_view name);
const std::vector<Morphology>& AllMorphologies();

// Shoulder-to-fingertip link lengths of the human-like arm.
std::vector<double> DefaultLinkLengths(Morphology morphology);

// Planar serial chain rooted at the origin. Link lengths are positive and
// normalized to a total length of 1. Joint angles are relative: link m points
// along the cumulative sum of joint angles 1..m.
class ArmModel {
 public:
  explicit ArmModel(std::vector<double> link_lengths);

  static ArmModel FromMorphology(Morphology morphology);

  int num_joints() const { return static_cast<int>(link_lengths_.size()); }
  const std::vector<double>& link_lengths() const { return link_lengths_; }

 private:
  std::vector<double> link_lengths_;
};

struct ArmPose {
  Point2 end_effector;
  std::vector<Point2> joint_positions;  // M+1 points, first is the origin
};

ArmPose ForwardKinematics(const ArmModel& arm,
                          const Eigen::Ref<const Eigen::VectorXd>& joint_angles);

// End effector only; avoids allocating the joint positions.
Point2 EndEffector(const ArmModel& arm,
                   const Eigen::Ref<const Eigen::VectorXd>& joint_angles);

// Two concentric arcs of targets in the upper half of the workspace.
struct TargetLayout {
  double inner_radius = 0.65;
  double outer_radius = 0.85;
  double min_angle_deg = 30.0;
  double max_angle_deg = 150.0;
  int points_per_arc = 10;
  // Targets closer to the shoulder than this are rejected.
  double min_radius = 0.5;
};

struct TargetSet {
  std::vector<Point2> targets;

  int size() const { return static_cast<int>(targets.size()); }
};

// Outer arc at angles min + i*step, inner arc at min + (i+1)*step, with
// step = (max - min) / points_per_arc. With the defaults this yields 20
// targets, one of which is exactly (0, 0.85).
TargetSet DefaultTargets(const TargetLayout& layout = {});

void WriteTargetsCsv(const TargetSet& targets, const std::string& path);

}  // namespace pdff

#endif  // PDFF_ARM_H_
