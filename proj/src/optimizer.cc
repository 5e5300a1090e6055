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

#include "pdff/optimizer.h"

#include <stdexcept>
#include <string>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

namespace pdff {

void OptimizerConfig::Validate() const {
  if (samples_per_update < 2) {
    throw std::invalid_argument("samples_per_update must be >= 2");
  }
  if (!(eliteness >= 0.0)) throw std::invalid_argument("eliteness must be >= 0");
  if (!(lambda_init > 0.0)) {
    throw std::invalid_argument("lambda_init must be > 0");
  }
  if (!(lambda_min >= 0.0)) {
    throw std::invalid_argument("lambda_min must be >= 0");
  }
  if (updates < 1) throw std::invalid_argument("updates must be >= 1");
}

SearchDistribution SearchDistribution::Isotropic(const Eigen::MatrixXd& mean,
                                                 double lambda_init,
                                                 double lambda_min) {
  SearchDistribution dist;
  dist.lambda_min = lambda_min;
  for (Eigen::Index m = 0; m < mean.rows(); ++m) {
    dist.means.push_back(mean.row(m).transpose());
    dist.covariances.push_back(
        lambda_init * Eigen::MatrixXd::Identity(mean.cols(), mean.cols()));
  }
  return dist;
}

Eigen::MatrixXd SearchDistribution::MeanMatrix() const {
  Eigen::MatrixXd mean(num_blocks(), block_size());
  for (int m = 0; m < num_blocks(); ++m) mean.row(m) = means[m].transpose();
  return mean;
}

std::vector<Eigen::MatrixXd> SampleCandidates(const SearchDistribution& dist,
                                              int num_samples,
                                              std::mt19937_64& rng) {
  const int blocks = dist.num_blocks();
  const int dim = dist.block_size();
  std::vector<Eigen::MatrixXd> factors;
  factors.reserve(blocks);
  for (const Eigen::MatrixXd& covariance : dist.covariances) {
    Eigen::LLT<Eigen::MatrixXd> llt(covariance);
    if (llt.info() != Eigen::Success) {
      throw std::logic_error("search covariance is not positive definite");
    }
    factors.push_back(llt.matrixL());
  }
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<Eigen::MatrixXd> candidates;
  candidates.reserve(num_samples);
  Eigen::VectorXd z(dim);
  for (int k = 0; k < num_samples; ++k) {
    Eigen::MatrixXd candidate(blocks, dim);
    for (int m = 0; m < blocks; ++m) {
      for (int b = 0; b < dim; ++b) z[b] = normal(rng);
      candidate.row(m) = (dist.means[m] + factors[m] * z).transpose();
    }
    candidates.push_back(std::move(candidate));
  }
  return candidates;
}

std::vector<Eigen::MatrixXd> SampleCandidates(const SearchDistribution& dist,
                                              int num_samples, uint64_t seed) {
  std::mt19937_64 rng(seed);
  return SampleCandidates(dist, num_samples, rng);
}

Eigen::VectorXd CostsToWeights(const Eigen::Ref<const Eigen::VectorXd>& costs,
                               double eliteness) {
  const Eigen::Index k = costs.size();
  if (k < 2) throw std::invalid_argument("need at least two costs to weight");
  const double lo = costs.minCoeff();
  const double hi = costs.maxCoeff();
  if (!(hi > lo)) return Eigen::VectorXd::Constant(k, 1.0 / k);
  Eigen::VectorXd weights =
      (-eliteness * (costs.array() - lo) / (hi - lo)).exp().matrix();
  return weights / weights.sum();
}

Eigen::MatrixXd FloorEigenvalues(const Eigen::MatrixXd& covariance,
                                 double floor) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(covariance);
  if (eig.eigenvalues().minCoeff() >= floor) return covariance;
  const Eigen::VectorXd clipped = eig.eigenvalues().cwiseMax(floor);
  Eigen::MatrixXd floored = eig.eigenvectors() * clipped.asDiagonal() *
                            eig.eigenvectors().transpose();
  return 0.5 * (floored + floored.transpose());
}

SearchDistribution UpdateDistribution(const SearchDistribution& dist,
                                      const SampleBatch& batch,
                                      bool apply_floor) {
  if (batch.size() == 0 || batch.weights.size() != batch.size()) {
    throw std::invalid_argument("batch weights do not match candidates");
  }
  SearchDistribution next = dist;
  for (int m = 0; m < dist.num_blocks(); ++m) {
    const Eigen::Index dim = dist.means[m].size();
    Eigen::VectorXd mean = Eigen::VectorXd::Zero(dim);
    Eigen::MatrixXd covariance = Eigen::MatrixXd::Zero(dim, dim);
    for (int k = 0; k < batch.size(); ++k) {
      const Eigen::VectorXd theta = batch.candidates[k].row(m).transpose();
      const Eigen::VectorXd eps = theta - dist.means[m];
      mean += batch.weights[k] * theta;
      covariance.noalias() += batch.weights[k] * eps * eps.transpose();
    }
    next.means[m] = mean;
    next.covariances[m] =
        apply_floor ? FloorEigenvalues(covariance, dist.lambda_min) : covariance;
  }
  return next;
}

ExplorationState Exploration(const SearchDistribution& dist) {
  ExplorationState state;
  state.magnitudes.resize(dist.num_blocks());
  for (int m = 0; m < dist.num_blocks(); ++m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(
        dist.covariances[m], Eigen::EigenvaluesOnly);
    state.magnitudes[m] = eig.eigenvalues().maxCoeff();
  }
  state.total = state.magnitudes.sum();
  state.relative = state.magnitudes / state.total;
  return state;
}

PiBBOptimizer::PiBBOptimizer(SearchDistribution initial,
                             const OptimizerConfig& config, uint64_t seed)
    : dist_(std::move(initial)), config_(config), rng_(seed) {
  config_.Validate();
}

SampleBatch PiBBOptimizer::Step(const CandidateCost& cost) {
  SampleBatch batch;
  batch.candidates = SampleCandidates(dist_, config_.samples_per_update, rng_);
  batch.costs.resize(batch.size());
  for (int k = 0; k < batch.size(); ++k) {
    batch.costs[k] = cost(batch.candidates[k]);
  }
  batch.weights = CostsToWeights(batch.costs, config_.eliteness);
  dist_ = UpdateDistribution(dist_, batch);
  return batch;
}

}  // namespace pdff
