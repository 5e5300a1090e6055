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

#include "pdff/dtw.h"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace pdff {

namespace {

Eigen::MatrixXd Accumulate(const Eigen::Ref<const Eigen::VectorXd>& a,
                           const Eigen::Ref<const Eigen::VectorXd>& b) {
  if (a.size() == 0 || b.size() == 0) {
    throw std::invalid_argument("dtw on an empty series");
  }
  const Eigen::Index n = a.size(), m = b.size();
  constexpr double kInf = std::numeric_limits<double>::infinity();
  Eigen::MatrixXd acc(n, m);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) {
      const double local = (a[i] - b[j]) * (a[i] - b[j]);
      if (i == 0 && j == 0) {
        acc(i, j) = local;
        continue;
      }
      const double diag = (i > 0 && j > 0) ? acc(i - 1, j - 1) : kInf;
      const double up = i > 0 ? acc(i - 1, j) : kInf;
      const double left = j > 0 ? acc(i, j - 1) : kInf;
      acc(i, j) = local + std::min({diag, up, left});
    }
  }
  return acc;
}

}  // namespace

DtwAlignment DtwAlign(const Eigen::Ref<const Eigen::VectorXd>& reference,
                      const Eigen::Ref<const Eigen::VectorXd>& query) {
  const Eigen::MatrixXd acc = Accumulate(reference, query);
  constexpr double kInf = std::numeric_limits<double>::infinity();
  DtwAlignment out;
  int i = static_cast<int>(reference.size()) - 1;
  int j = static_cast<int>(query.size()) - 1;
  out.distance = acc(i, j);
  out.path.emplace_back(i, j);
  while (i > 0 || j > 0) {
    const double diag = (i > 0 && j > 0) ? acc(i - 1, j - 1) : kInf;
    const double up = i > 0 ? acc(i - 1, j) : kInf;
    const double left = j > 0 ? acc(i, j - 1) : kInf;
    if (diag <= up && diag <= left) {
      --i;
      --j;
    } else if (up <= left) {
      --i;
    } else {
      --j;
    }
    out.path.emplace_back(i, j);
  }
  std::reverse(out.path.begin(), out.path.end());

  out.warped = Eigen::VectorXd::Zero(reference.size());
  Eigen::VectorXd counts = Eigen::VectorXd::Zero(reference.size());
  for (const auto& [r, q] : out.path) {
    out.warped[r] += query[q];
    counts[r] += 1.0;
  }
  out.warped.array() /= counts.array();
  return out;
}

double DtwDistance(const Eigen::Ref<const Eigen::VectorXd>& a,
                   const Eigen::Ref<const Eigen::VectorXd>& b) {
  const Eigen::MatrixXd acc = Accumulate(a, b);
  return acc(acc.rows() - 1, acc.cols() - 1);
}

}  // namespace pdff
