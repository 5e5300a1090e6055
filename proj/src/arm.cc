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

#include <cmath>
#include <fstream>
#include <numbers>
#include <stdexcept>
#include <string>

#include "pdff/csv.h"

namespace pdff {

std::string_view MorphologyName(Morphology morphology) {
  switch (morphology) {
    case Morphology::kHuman:
      return "human";
    case Morphology::kEquidistant:
      return "equidistant";
    case Morphology::kInvertedHuman:
      return "inverted";
  }
  return "unknown";
}

Morphology ParseMorphology(std::string_view name) {
  if (name == "human") return Morphology::kHuman;
  if (name == "equidistant") return Morphology::kEquidistant;
  if (name == "inverted" || name == "inverted_human") {
    return Morphology::kInvertedHuman;
  }
  throw std::invalid_argument("unknown morphology '" + std::string(name) +
                              "'");
}

const std::vector<Morphology>& AllMorphologies() {
  static const std::vector<Morphology> kAll = {
      Morphology::kHuman, Morphology::kEquidistant,
      Morphology::kInvertedHuman};
  return kAll;
}

std::vector<double> DefaultLinkLengths(Morphology morphology) {
  const std::vector<double> human = {0.30, 0.27, 0.16, 0.12, 0.08, 0.07};
  switch (morphology) {
    case Morphology::kHuman:
      return human;
    case Morphology::kEquidistant:
      return std::vector<double>(6, 1.0 / 6.0);
    case Morphology::kInvertedHuman:
      return {human.rbegin(), human.rend()};
  }
  throw std::invalid_argument("unknown morphology");
}

ArmModel::ArmModel(std::vector<double> link_lengths)
    : link_lengths_(std::move(link_lengths)) {
  if (link_lengths_.empty()) {
    throw std::invalid_argument("arm needs at least one link");
  }
  double total = 0.0;
  for (double length : link_lengths_) {
    if (!(length > 0.0)) {
      throw std::invalid_argument("link lengths must be positive");
    }
    total += length;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw std::invalid_argument("link lengths must sum to 1, got " +
                                std::to_string(total));
  }
}

ArmModel ArmModel::FromMorphology(Morphology morphology) {
  return ArmModel(DefaultLinkLengths(morphology));
}

namespace {

void CheckDimension(const ArmModel& arm, Eigen::Index n) {
  if (n != arm.num_joints()) {
    throw std::invalid_argument("expected " + std::to_string(arm.num_joints()) +
                                " joint angles, got " + std::to_string(n));
  }
}

}  // namespace

ArmPose ForwardKinematics(const ArmModel& arm,
                          const Eigen::Ref<const Eigen::VectorXd>& joint_angles) {
  CheckDimension(arm, joint_angles.size());
  ArmPose pose;
  pose.joint_positions.reserve(arm.num_joints() + 1);
  Point2 position = Point2::Zero();
  pose.joint_positions.push_back(position);
  double heading = 0.0;
  for (int m = 0; m < arm.num_joints(); ++m) {
    heading += joint_angles[m];
    position += arm.link_lengths()[m] * Point2(std::cos(heading),
                                               std::sin(heading));
    pose.joint_positions.push_back(position);
  }
  pose.end_effector = position;
  return pose;
}

Point2 EndEffector(const ArmModel& arm,
                   const Eigen::Ref<const Eigen::VectorXd>& joint_angles) {
  CheckDimension(arm, joint_angles.size());
  double x = 0.0, y = 0.0, heading = 0.0;
  for (int m = 0; m < arm.num_joints(); ++m) {
    heading += joint_angles[m];
    x += arm.link_lengths()[m] * std::cos(heading);
    y += arm.link_lengths()[m] * std::sin(heading);
  }
  return {x, y};
}

namespace {

// Point on a circle, exact on the axes so that 90 degrees gives x == 0.
Point2 PolarDeg(double radius, double angle_deg) {
  if (angle_deg == 90.0) return {0.0, radius};
  if (angle_deg == 0.0) return {radius, 0.0};
  if (angle_deg == 180.0) return {-radius, 0.0};
  const double rad = angle_deg * std::numbers::pi / 180.0;
  return {radius * std::cos(rad), radius * std::sin(rad)};
}

}  // namespace

TargetSet DefaultTargets(const TargetLayout& layout) {
  if (layout.points_per_arc < 1) {
    throw std::invalid_argument("points_per_arc must be >= 1");
  }
  if (!(layout.max_angle_deg >= layout.min_angle_deg)) {
    throw std::invalid_argument("target angle range is empty");
  }
  const double step = (layout.max_angle_deg - layout.min_angle_deg) /
                      layout.points_per_arc;
  TargetSet set;
  for (int i = 0; i < layout.points_per_arc; ++i) {
    set.targets.push_back(
        PolarDeg(layout.outer_radius, layout.min_angle_deg + i * step));
  }
  for (int i = 0; i < layout.points_per_arc; ++i) {
    set.targets.push_back(
        PolarDeg(layout.inner_radius, layout.min_angle_deg + (i + 1) * step));
  }
  for (const Point2& target : set.targets) {
    const double r = target.norm();
    if (r > 1.0 || r < layout.min_radius) {
      throw std::invalid_argument("target radius " + std::to_string(r) +
                                  " outside reachable band");
    }
  }
  return set;
}

void WriteTargetsCsv(const TargetSet& targets, const std::string& path) {
  CsvWriter csv(path, {"index", "x", "y"});
  for (int i = 0; i < targets.size(); ++i) {
    csv.Row({static_cast<double>(i), targets.targets[i].x(),
             targets.targets[i].y()});
  }
}

}  // namespace pdff
