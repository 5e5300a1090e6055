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

#ifndef PDFF_EXPERIMENT_H_
#define PDFF_EXPERIMENT_H_

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <nlohmann/json.hpp>

#include "pdff/arm.h"
#include "pdff/cost.h"
#include "pdff/optimizer.h"
#include "pdff/policy.h"

namespace pdff {

struct CampaignConfig {
  OptimizerConfig optimizer;
  BasisFunctionSet basis;
  double dt = 0.01;
  CostWeights cost;
  int sessions_per_target = 10;
  uint64_t base_seed = 0;
  int jobs = 1;  // worker threads; results do not depend on it
};

// Compact per-session record kept for alignment and convergence statistics.
struct SessionOutcome {
  int target_index = 0;
  uint64_t seed = 0;
  Eigen::MatrixXd magnitudes;    // updates x joints, lambda_m per update
  Eigen::VectorXd mean_cost;     // total cost of the mean policy per update
  double final_distance = 0.0;   // after the last update
  double final_cost = 0.0;
};

struct PeakRecord {
  int joint = 0;     // 1-based
  int update = 0;    // 1-based
  double magnitude = 0.0;
  // Peak sits at update 1 at (nearly) the uniform share: the joint was never
  // freed rather than freed first.
  bool never_freed = false;
};

struct CampaignResult {
  std::string label;
  Eigen::MatrixXd mean_relative;   // updates x joints
  Eigen::MatrixXd mean_magnitude;  // updates x joints
  Eigen::VectorXd mean_total;      // per update, mean of sum_m lambda_m
  std::vector<PeakRecord> peaks;
  std::vector<SessionOutcome> sessions;

  int num_updates() const { return static_cast<int>(mean_total.size()); }
  int num_joints() const { return static_cast<int>(mean_relative.cols()); }
};

// Runs sessions_per_target sessions for every target. Session i (target-major
// order) uses seed base_seed + i. Throws if any session fails.
CampaignResult RunCampaign(const ArmModel& arm, const TargetSet& targets,
                           const CampaignConfig& config,
                           const std::string& label = "");

// Argmax of every column (earliest update on ties).
std::vector<PeakRecord> ComputePeaks(const Eigen::MatrixXd& relative);

// Joints (1-based) ordered by the update of their relative peak, ties by
// joint index.
std::vector<int> FreeingOrder(const CampaignResult& result);
std::vector<int> FreeingOrder(const std::vector<PeakRecord>& peaks);

struct AlignedVariance {
  Eigen::VectorXd mean;
  Eigen::VectorXd stddev;
};

// Aligns every curve to the cross-curve mean with DTW (one pass) and returns
// the per-index mean and sample standard deviation of the warped curves.
// Needs at least two curves of equal length.
AlignedVariance AlignedVarianceOf(const std::vector<Eigen::VectorXd>& curves);

// Per-index mean and sample standard deviation without alignment.
AlignedVariance UnalignedVarianceOf(const std::vector<Eigen::VectorXd>& curves);

// Exploration magnitude curves of one joint (1-based) across the campaign.
std::vector<Eigen::VectorXd> JointCurves(const CampaignResult& result,
                                         int joint);

// Columns: update, rel_1..M, lambda_1..M, total_lambda.
void WriteCampaignCsv(const CampaignResult& result, const std::string& path);
// Columns: session, target_index, seed, final_distance, final_cost.
void WriteSessionsCsv(const CampaignResult& result, const std::string& path);
// Columns: update, mean, std, unaligned_mean, unaligned_std.
void WriteAlignedCsv(const AlignedVariance& aligned,
                     const AlignedVariance& unaligned, const std::string& path);
nlohmann::json PeakSummary(const CampaignResult& result);

}  // namespace pdff

#endif  // PDFF_EXPERIMENT_H_
