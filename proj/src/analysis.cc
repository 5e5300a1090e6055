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

#include "pdff/analysis.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "pdff/cost.h"
#include "pdff/csv.h"

namespace pdff {

double StaticCost(const ArmModel& arm,
                  const Eigen::Ref<const Eigen::VectorXd>& joint_angles,
                  const Point2& target, const StaticCostOptions& options) {
  const double distance = StaticDistanceCost(arm, joint_angles, target);
  if (!options.include_comfort) return distance;
  return 1e2 * distance * distance + joint_angles.maxCoeff();
}

SensitivityReport Sensitivity(const ArmModel& arm, const TargetSet& targets,
                              double perturbation,
                              const StaticCostOptions& options) {
  if (targets.size() == 0) throw std::invalid_argument("no targets");
  const int joints = arm.num_joints();
  const Eigen::VectorXd rest = Eigen::VectorXd::Zero(joints);
  SensitivityReport report;
  report.per_joint = Eigen::VectorXd::Zero(joints);
  for (const Point2& target : targets.targets) {
    const double base = StaticCost(arm, rest, target, options);
    for (int m = 0; m < joints; ++m) {
      Eigen::VectorXd bent = rest;
      bent[m] = perturbation;
      report.per_joint[m] +=
          std::abs(StaticCost(arm, bent, target, options) - base);
    }
  }
  report.per_joint /= targets.size();
  return report;
}

double InteractionReport::Ratio(int proximal, int distal) const {
  for (const JointPair& pair : pairs) {
    if (pair.proximal == proximal && pair.distal == distal) return pair.ratio;
  }
  throw std::out_of_range("no joint pair (" + std::to_string(proximal) + ", " +
                          std::to_string(distal) + ")");
}

double Median(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("median of nothing");
  std::sort(values.begin(), values.end());
  const size_t n = values.size();
  return n % 2 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

namespace {

int Sign(double x) { return (x > 0) - (x < 0); }

}  // namespace

InteractionReport InteractionRatios(const ArmModel& arm,
                                    const TargetSet& targets,
                                    const InteractionOptions& options,
                                    uint64_t seed) {
  if (options.samples_per_target < 1) {
    throw std::invalid_argument("samples_per_target must be >= 1");
  }
  if (targets.size() == 0) throw std::invalid_argument("no targets");
  const int joints = arm.num_joints();
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> proximal_law(0.0, options.proximal_sigma);
  std::normal_distribution<double> distal_law(0.0, options.distal_sigma);

  InteractionReport report;
  Eigen::VectorXd q = Eigen::VectorXd::Zero(joints);
  auto cost = [&](int p, double proximal, int d, double distal,
                  const Point2& target) {
    q.setZero();
    q[p] = proximal;
    q[d] = distal;
    return StaticCost(arm, q, target, options.cost);
  };

  for (int p = 0; p < joints; ++p) {
    for (int d = p + 1; d < joints; ++d) {
      long unchanged = 0, trials = 0;
      for (const Point2& target : targets.targets) {
        for (int s = 0; s < options.samples_per_target; ++s) {
          const double p1 = proximal_law(rng);
          const double p2 = proximal_law(rng);
          // Distal draws attached to P1 and to P2, first and second round.
          const double d11 = options.distal_sigma > 0 ? distal_law(rng) : 0.0;
          const double d12 = options.distal_sigma > 0 ? distal_law(rng) : 0.0;
          const double d21 = options.distal_sigma > 0 ? distal_law(rng) : 0.0;
          const double d22 = options.distal_sigma > 0 ? distal_law(rng) : 0.0;
          const int first = Sign(cost(p, p1, d, d11, target) -
                                 cost(p, p2, d, d21, target));
          const int second = Sign(cost(p, p1, d, d12, target) -
                                  cost(p, p2, d, d22, target));
          unchanged += first == second;
          ++trials;
        }
      }
      report.pairs.push_back(
          {p + 1, d + 1, static_cast<double>(unchanged) / trials});
    }
  }
  std::vector<double> ratios;
  for (const JointPair& pair : report.pairs) ratios.push_back(pair.ratio);
  report.median = Median(ratios);
  return report;
}

void WriteSensitivityCsv(const std::vector<std::string>& labels,
                         const std::vector<SensitivityReport>& reports,
                         const std::string& path) {
  const Eigen::Index joints =
      reports.empty() ? 0 : reports.front().per_joint.size();
  std::vector<std::string> header = {"morphology"};
  for (Eigen::Index m = 1; m <= joints; ++m) {
    header.push_back("joint_" + std::to_string(m));
  }
  CsvWriter csv(path, header);
  for (size_t i = 0; i < reports.size(); ++i) {
    std::vector<std::string> row = {labels.at(i)};
    for (Eigen::Index m = 0; m < joints; ++m) {
      row.push_back(FormatNumber(reports[i].per_joint[m]));
    }
    csv.Row(row);
  }
}

void WriteInteractionCsv(const std::vector<std::string>& labels,
                         const std::vector<InteractionReport>& reports,
                         const std::string& path) {
  CsvWriter csv(path, {"morphology", "proximal", "distal", "ratio"});
  for (size_t i = 0; i < reports.size(); ++i) {
    for (const JointPair& pair : reports[i].pairs) {
      csv.Row(std::vector<std::string>{labels.at(i),
                                       std::to_string(pair.proximal),
                                       std::to_string(pair.distal),
                                       FormatNumber(pair.ratio)});
    }
  }
}

nlohmann::json InteractionSummary(const std::vector<std::string>& labels,
                                  const std::vector<InteractionReport>& reports) {
  nlohmann::json out = nlohmann::json::object();
  for (size_t i = 0; i < reports.size(); ++i) {
    nlohmann::json pairs = nlohmann::json::array();
    for (const JointPair& pair : reports[i].pairs) {
      pairs.push_back({{"proximal", pair.proximal},
                       {"distal", pair.distal},
                       {"ratio", pair.ratio}});
    }
    out[labels.at(i)] = {{"median", reports[i].median}, {"pairs", pairs}};
  }
  return out;
}

}  // namespace pdff
