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

// Dynamic time warping with the symmetric (match / insert / delete) step
// pattern and squared-difference local cost.

#ifndef PDFF_DTW_H_
#define PDFF_DTW_H_

#include <utility>
#include <vector>

#include <Eigen/Core>

namespace pdff {

struct DtwAlignment {
  double distance = 0.0;  // accumulated local cost along the optimal path
  // (reference index, query index) pairs from (0, 0) to (n-1, m-1).
  std::vector<std::pair<int, int>> path;
  // Query resampled onto the reference index: entry i is the mean of the
  // query samples matched to reference sample i.
  Eigen::VectorXd warped;
};

// Backtracking prefers the diagonal step on ties, then a reference step,
// then a query step. Throws std::invalid_argument on empty input.
DtwAlignment DtwAlign(const Eigen::Ref<const Eigen::VectorXd>& reference,
                      const Eigen::Ref<const Eigen::VectorXd>& query);

double DtwDistance(const Eigen::Ref<const Eigen::VectorXd>& a,
                   const Eigen::Ref<const Eigen::VectorXd>& b);

}  // namespace pdff

#endif  // PDFF_DTW_H_
