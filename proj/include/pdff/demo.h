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

// Two-dimensional illustration of the optimizer on J(theta) = |theta|.

#ifndef PDFF_DEMO_H_
#define PDFF_DEMO_H_

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "pdff/optimizer.h"

namespace pdff {

struct DemoConfig {
  Eigen::Vector2d start_mean{10.0, 10.0};
  OptimizerConfig optimizer{.samples_per_update = 15,
                            .eliteness = 10.0,
                            .lambda_init = 8.0,
                            .lambda_min = 0.01,
                            .updates = 20};
};

struct DemoSnapshot {
  int update = 0;  // 1-based; the distribution sampled at that update
  Eigen::Vector2d mean;
  double eig_major = 0.0;
  double eig_minor = 0.0;
  double major_angle = 0.0;  // radians, direction of the major axis
  double cost = 0.0;         // |mean|
};

double DemoCost(const Eigen::MatrixXd& candidate);

DemoSnapshot Snapshot(const SearchDistribution& dist, int update);

std::vector<DemoSnapshot> RunDemo(const DemoConfig& config, uint64_t seed);

// Columns: update, mean_x, mean_y, eig1, eig2, eigvec_angle, cost.
void WriteDemoCsv(const std::vector<DemoSnapshot>& snapshots,
                  const std::string& path);

}  // namespace pdff

#endif  // PDFF_DEMO_H_
