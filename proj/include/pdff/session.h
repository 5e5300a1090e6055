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

#ifndef PDFF_SESSION_H_
#define PDFF_SESSION_H_

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

struct ReachingTask {
  ArmModel arm;
  BasisFunctionSet basis;
  double dt = 0.01;
  CostWeights cost;
  Point2 target;

  CostBreakdown Evaluate(const Policy& policy) const;
};

// State of the search distribution at the start of one update, i.e. the
// distribution the update samples from, plus the cost of its mean policy.
struct UpdateRecord {
  int update = 0;  // 1-based
  ExplorationState exploration;
  CostBreakdown mean_cost;
  double mean_distance = 0.0;  // |x_final - goal| of the mean policy
};

struct SessionTrace {
  std::vector<UpdateRecord> updates;
  ExplorationState final_exploration;
  CostBreakdown final_cost;
  double final_distance = 0.0;
  Policy final_policy;

  int num_updates() const { return static_cast<int>(updates.size()); }
  // updates x joints matrices, rows indexed by update - 1.
  Eigen::MatrixXd MagnitudeMatrix() const;
  Eigen::MatrixXd RelativeMatrix() const;
  Eigen::VectorXd TotalSeries() const;
};

// Optimizes a zero-initialized policy on `task` for config.updates updates.
SessionTrace RunSession(const ReachingTask& task, const OptimizerConfig& config,
                        uint64_t seed);

// Row per update: update, lambda_1..M, rel_1..M, total, distance_term,
// comfort_term, acceleration_term, total_cost, distance.
void WriteSessionCsv(const SessionTrace& trace, const std::string& path);
nlohmann::json SessionSummary(const SessionTrace& trace);

}  // namespace pdff

#endif  // PDFF_SESSION_H_
