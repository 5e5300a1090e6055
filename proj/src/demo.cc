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

#include "pdff/demo.h"

#include <cmath>

#include <Eigen/Eigenvalues>

#include "pdff/csv.h"

namespace pdff {

double DemoCost(const Eigen::MatrixXd& candidate) { return candidate.norm(); }

DemoSnapshot Snapshot(const SearchDistribution& dist, int update) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(dist.covariances.at(0));
  // Eigenvalues come sorted ascending.
  const Eigen::Vector2d major = eig.eigenvectors().col(1);
  DemoSnapshot s;
  s.update = update;
  s.mean = dist.means.at(0);
  s.eig_major = eig.eigenvalues()[1];
  s.eig_minor = eig.eigenvalues()[0];
  s.major_angle = std::atan2(major.y(), major.x());
  s.cost = s.mean.norm();
  return s;
}

std::vector<DemoSnapshot> RunDemo(const DemoConfig& config, uint64_t seed) {
  PiBBOptimizer optimizer(
      SearchDistribution::Isotropic(config.start_mean.transpose(),
                                    config.optimizer.lambda_init,
                                    config.optimizer.lambda_min),
      config.optimizer, seed);
  std::vector<DemoSnapshot> snapshots;
  for (int u = 1; u <= config.optimizer.updates; ++u) {
    snapshots.push_back(Snapshot(optimizer.distribution(), u));
    optimizer.Step(DemoCost);
  }
  return snapshots;
}

void WriteDemoCsv(const std::vector<DemoSnapshot>& snapshots,
                  const std::string& path) {
  CsvWriter csv(path, {"update", "mean_x", "mean_y", "eig1", "eig2",
                       "eigvec_angle", "cost"});
  for (const DemoSnapshot& s : snapshots) {
    csv.Row({static_cast<double>(s.update), s.mean.x(), s.mean.y(), s.eig_major,
             s.eig_minor, s.major_angle, s.cost});
  }
}

}  // namespace pdff
