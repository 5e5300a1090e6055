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

#ifndef PDFF_OPTIMIZER_H_
#define PDFF_OPTIMIZER_H_

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include <Eigen/Core>

namespace pdff {

struct OptimizerConfig {
  int samples_per_update = 20;  // K
  double eliteness = 10.0;      // h
  double lambda_init = 0.05;
  double lambda_min = 0.05;
  int updates = 100;

  // Throws std::invalid_argument naming the offending field.
  void Validate() const;
};

// Block-diagonal Gaussian over parameter matrices: row m of a candidate is
// drawn from N(means[m], covariances[m]), independently across rows.
struct SearchDistribution {
  std::vector<Eigen::VectorXd> means;
  std::vector<Eigen::MatrixXd> covariances;
  double lambda_min = 0.0;

  // Means from the rows of `mean`, every covariance lambda_init * I.
  static SearchDistribution Isotropic(const Eigen::MatrixXd& mean,
                                      double lambda_init, double lambda_min);

  int num_blocks() const { return static_cast<int>(means.size()); }
  int block_size() const {
    return means.empty() ? 0 : static_cast<int>(means.front().size());
  }
  Eigen::MatrixXd MeanMatrix() const;
};

struct SampleBatch {
  std::vector<Eigen::MatrixXd> candidates;  // each num_blocks x block_size
  Eigen::VectorXd costs;
  Eigen::VectorXd weights;

  int size() const { return static_cast<int>(candidates.size()); }
};

// Per-block exploration magnitude: the largest eigenvalue of each covariance.
struct ExplorationState {
  Eigen::VectorXd magnitudes;
  Eigen::VectorXd relative;  // magnitudes / total
  double total = 0.0;
};

// Draws K candidates. Throws std::logic_error if a covariance is not
// positive definite.
std::vector<Eigen::MatrixXd> SampleCandidates(const SearchDistribution& dist,
                                              int num_samples,
                                              std::mt19937_64& rng);
std::vector<Eigen::MatrixXd> SampleCandidates(const SearchDistribution& dist,
                                              int num_samples, uint64_t seed);

// P_k = exp(-h (J_k - min J) / (max J - min J)), normalized to sum to one.
// Uniform if all costs are equal.
Eigen::VectorXd CostsToWeights(const Eigen::Ref<const Eigen::VectorXd>& costs,
                               double eliteness);

// Weighted-average update of every block: the new mean is sum_k P_k theta_k
// and the new covariance sum_k P_k (theta_k - mean)(theta_k - mean)^T using
// the mean the batch was sampled from. Eigenvalues are then floored at
// lambda_min unless `apply_floor` is false.
SearchDistribution UpdateDistribution(const SearchDistribution& dist,
                                      const SampleBatch& batch,
                                      bool apply_floor = true);

// Raises eigenvalues below `floor` to `floor` in the symmetric matrix's
// eigenbasis.
Eigen::MatrixXd FloorEigenvalues(const Eigen::MatrixXd& covariance,
                                 double floor);

ExplorationState Exploration(const SearchDistribution& dist);

using CandidateCost = std::function<double(const Eigen::MatrixXd&)>;

// Explore / evaluate / update loop with an owned random stream.
class PiBBOptimizer {
 public:
  PiBBOptimizer(SearchDistribution initial, const OptimizerConfig& config,
                uint64_t seed);

  // One update. Returns the evaluated batch.
  SampleBatch Step(const CandidateCost& cost);

  const SearchDistribution& distribution() const { return dist_; }
  const OptimizerConfig& config() const { return config_; }

 private:
  SearchDistribution dist_;
  OptimizerConfig config_;
  std::mt19937_64 rng_;
};

}  // namespace pdff

#endif  // PDFF_OPTIMIZER_H_
