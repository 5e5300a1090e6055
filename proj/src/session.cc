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

#include "pdff/session.h"

#include "pdff/csv.h"

namespace pdff {

CostBreakdown ReachingTask::Evaluate(const Policy& policy) const {
  return EvaluateCost(Rollout(arm, basis, policy, dt), target, cost);
}

Eigen::MatrixXd SessionTrace::MagnitudeMatrix() const {
  Eigen::MatrixXd out(num_updates(),
                      updates.empty() ? 0 : updates[0].exploration.magnitudes.size());
  for (int u = 0; u < num_updates(); ++u) {
    out.row(u) = updates[u].exploration.magnitudes.transpose();
  }
  return out;
}

Eigen::MatrixXd SessionTrace::RelativeMatrix() const {
  Eigen::MatrixXd out(num_updates(),
                      updates.empty() ? 0 : updates[0].exploration.relative.size());
  for (int u = 0; u < num_updates(); ++u) {
    out.row(u) = updates[u].exploration.relative.transpose();
  }
  return out;
}

Eigen::VectorXd SessionTrace::TotalSeries() const {
  Eigen::VectorXd out(num_updates());
  for (int u = 0; u < num_updates(); ++u) out[u] = updates[u].exploration.total;
  return out;
}

SessionTrace RunSession(const ReachingTask& task, const OptimizerConfig& config,
                        uint64_t seed) {
  config.Validate();
  const int joints = task.arm.num_joints();
  const Eigen::MatrixXd grid = ActivationGrid(task.basis, task.dt);
  auto evaluate = [&](const Eigen::MatrixXd& weights) {
    return EvaluateCost(Rollout(task.arm, grid, Policy{weights}, task.dt),
                        task.target, task.cost);
  };
  auto distance = [&](const Eigen::MatrixXd& weights) {
    const Trajectory traj = Rollout(task.arm, grid, Policy{weights}, task.dt);
    return (traj.final_end_effector() - task.target).norm();
  };

  PiBBOptimizer optimizer(
      SearchDistribution::Isotropic(
          Eigen::MatrixXd::Zero(joints, task.basis.size()), config.lambda_init,
          config.lambda_min),
      config, seed);

  SessionTrace trace;
  trace.updates.reserve(config.updates);
  for (int u = 1; u <= config.updates; ++u) {
    const Eigen::MatrixXd mean = optimizer.distribution().MeanMatrix();
    UpdateRecord record;
    record.update = u;
    record.exploration = Exploration(optimizer.distribution());
    record.mean_cost = evaluate(mean);
    record.mean_distance = distance(mean);
    trace.updates.push_back(std::move(record));
    optimizer.Step(
        [&](const Eigen::MatrixXd& candidate) { return evaluate(candidate).total; });
  }
  const Eigen::MatrixXd mean = optimizer.distribution().MeanMatrix();
  trace.final_exploration = Exploration(optimizer.distribution());
  trace.final_cost = evaluate(mean);
  trace.final_distance = distance(mean);
  trace.final_policy = Policy{mean};
  return trace;
}

void WriteSessionCsv(const SessionTrace& trace, const std::string& path) {
  const int joints = trace.updates.empty()
                         ? 0
                         : static_cast<int>(trace.updates[0].exploration.magnitudes.size());
  std::vector<std::string> header = {"update"};
  for (int m = 1; m <= joints; ++m) header.push_back("lambda_" + std::to_string(m));
  for (int m = 1; m <= joints; ++m) header.push_back("rel_" + std::to_string(m));
  for (const char* name :
       {"total_lambda", "distance_term", "comfort_term", "acceleration_term",
        "total_cost", "distance"}) {
    header.emplace_back(name);
  }
  CsvWriter csv(path, header);
  for (const UpdateRecord& r : trace.updates) {
    std::vector<double> row = {static_cast<double>(r.update)};
    for (int m = 0; m < joints; ++m) row.push_back(r.exploration.magnitudes[m]);
    for (int m = 0; m < joints; ++m) row.push_back(r.exploration.relative[m]);
    row.insert(row.end(), {r.exploration.total, r.mean_cost.distance_term,
                           r.mean_cost.comfort_term, r.mean_cost.acceleration_term,
                           r.mean_cost.total, r.mean_distance});
    csv.Row(row);
  }
}

nlohmann::json SessionSummary(const SessionTrace& trace) {
  std::vector<double> final_lambda(trace.final_exploration.magnitudes.begin(),
                                   trace.final_exploration.magnitudes.end());
  return {{"updates", trace.num_updates()},
          {"final_cost", trace.final_cost},
          {"final_distance", trace.final_distance},
          {"final_lambda", final_lambda},
          {"final_total_lambda", trace.final_exploration.total}};
}

}  // namespace pdff
