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

#ifndef PDFF_ANALYSIS_H_
#define PDFF_ANALYSIS_H_

#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <nlohmann/json.hpp>

#include "pdff/arm.h"

namespace pdff {

struct StaticCostOptions {
  // Off: plain end-effector distance |x - goal|. On: the terminal cost
  // 100 |x - goal|^2 + max(q), which ranks postures differently.
  bool include_comfort = false;
};

double StaticCost(const ArmModel& arm,
                  const Eigen::Ref<const Eigen::VectorXd>& joint_angles,
                  const Point2& target, const StaticCostOptions& options);

struct SensitivityReport {
  // Per joint: mean over targets of |cost(joint m = perturbation) - cost(0)|.
  Eigen::VectorXd per_joint;
};

SensitivityReport Sensitivity(const ArmModel& arm, const TargetSet& targets,
                              double perturbation = std::numbers::pi / 10,
                              const StaticCostOptions& options = {});

struct InteractionOptions {
  int samples_per_target = 100;
  double proximal_sigma = std::numbers::pi / 10;
  double distal_sigma = std::numbers::pi / 10;
  StaticCostOptions cost;
};

struct JointPair {
  int proximal = 0;  // 1-based
  int distal = 0;
  double ratio = 0.0;
};

struct InteractionReport {
  std::vector<JointPair> pairs;  // (1,2), (1,3), ..., (M-1,M)
  double median = 0.0;

  // Throws std::out_of_range for a pair that is not in the report.
  double Ratio(int proximal, int distal) const;
};

// For every proximal < distal pair, the fraction of (sample, target) trials
// in which two proximal perturbations P1, P2 keep the same cost order when
// each is combined with a first and then a second independent distal draw.
// Every other joint stays at zero.
InteractionReport InteractionRatios(const ArmModel& arm,
                                    const TargetSet& targets,
                                    const InteractionOptions& options,
                                    uint64_t seed);

double Median(std::vector<double> values);

void WriteSensitivityCsv(const std::vector<std::string>& labels,
                         const std::vector<SensitivityReport>& reports,
                         const std::string& path);
void WriteInteractionCsv(const std::vector<std::string>& labels,
                         const std::vector<InteractionReport>& reports,
                         const std::string& path);
nlohmann::json InteractionSummary(const std::vector<std::string>& labels,
                                  const std::vector<InteractionReport>& reports);

}  // namespace pdff

#endif  // PDFF_ANALYSIS_H_
