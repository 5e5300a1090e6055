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

#include "pdff/experiment.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "pdff/csv.h"
#include "pdff/dtw.h"
#include "pdff/session.h"

namespace pdff {

CampaignResult RunCampaign(const ArmModel& arm, const TargetSet& targets,
                           const CampaignConfig& config,
                           const std::string& label) {
  if (config.sessions_per_target < 1) {
    throw std::invalid_argument("sessions_per_target must be >= 1");
  }
  if (targets.size() < 1) throw std::invalid_argument("no targets");
  config.optimizer.Validate();

  const int total = targets.size() * config.sessions_per_target;
  std::vector<SessionOutcome> outcomes(total);
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (int i = next++; i < total; i = next++) {
      try {
        SessionOutcome& out = outcomes[i];
        out.target_index = i / config.sessions_per_target;
        out.seed = config.base_seed + static_cast<uint64_t>(i);
        const ReachingTask task{arm, config.basis, config.dt, config.cost,
                                targets.targets[out.target_index]};
        const SessionTrace trace = RunSession(task, config.optimizer, out.seed);
        out.magnitudes = trace.MagnitudeMatrix();
        out.mean_cost.resize(trace.num_updates());
        for (int u = 0; u < trace.num_updates(); ++u) {
          out.mean_cost[u] = trace.updates[u].mean_cost.total;
        }
        out.final_distance = trace.final_distance;
        out.final_cost = trace.final_cost.total;
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = total;
      }
    }
  };
  const int jobs = std::clamp(config.jobs, 1, total);
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  // Reduction in session order keeps the sums bitwise reproducible.
  const int updates = config.optimizer.updates;
  const int joints = arm.num_joints();
  CampaignResult result;
  result.label = label;
  result.mean_relative = Eigen::MatrixXd::Zero(updates, joints);
  result.mean_magnitude = Eigen::MatrixXd::Zero(updates, joints);
  result.mean_total = Eigen::VectorXd::Zero(updates);
  for (const SessionOutcome& out : outcomes) {
    const Eigen::VectorXd totals = out.magnitudes.rowwise().sum();
    result.mean_magnitude += out.magnitudes;
    result.mean_total += totals;
    result.mean_relative +=
        (out.magnitudes.array().colwise() / totals.array()).matrix();
  }
  result.mean_relative /= total;
  result.mean_magnitude /= total;
  result.mean_total /= total;
  result.peaks = ComputePeaks(result.mean_relative);
  result.sessions = std::move(outcomes);
  return result;
}

std::vector<PeakRecord> ComputePeaks(const Eigen::MatrixXd& relative) {
  const double uniform = relative.cols() ? 1.0 / relative.cols() : 0.0;
  std::vector<PeakRecord> peaks;
  for (Eigen::Index m = 0; m < relative.cols(); ++m) {
    Eigen::Index row = 0;
    const double best = relative.col(m).maxCoeff(&row);
    PeakRecord peak;
    peak.joint = static_cast<int>(m) + 1;
    peak.update = static_cast<int>(row) + 1;
    peak.magnitude = best;
    peak.never_freed = peak.update == 1 && best <= uniform + 0.02;
    peaks.push_back(peak);
  }
  return peaks;
}

std::vector<int> FreeingOrder(const std::vector<PeakRecord>& peaks) {
  std::vector<PeakRecord> sorted = peaks;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const PeakRecord& a, const PeakRecord& b) {
                     if (a.update != b.update) return a.update < b.update;
                     return a.joint < b.joint;
                   });
  std::vector<int> order;
  for (const PeakRecord& peak : sorted) order.push_back(peak.joint);
  return order;
}

std::vector<int> FreeingOrder(const CampaignResult& result) {
  return FreeingOrder(result.peaks);
}

namespace {

void CheckCurves(const std::vector<Eigen::VectorXd>& curves) {
  if (curves.size() < 2) {
    throw std::invalid_argument("need at least two curves");
  }
  for (const Eigen::VectorXd& curve : curves) {
    if (curve.size() != curves.front().size() || curve.size() == 0) {
      throw std::invalid_argument("curves must share a non-empty length");
    }
  }
}

AlignedVariance MeanAndStd(const std::vector<Eigen::VectorXd>& curves) {
  const Eigen::Index n = curves.front().size();
  AlignedVariance out;
  out.mean = Eigen::VectorXd::Zero(n);
  for (const Eigen::VectorXd& c : curves) out.mean += c;
  out.mean /= static_cast<double>(curves.size());
  Eigen::VectorXd sq = Eigen::VectorXd::Zero(n);
  for (const Eigen::VectorXd& c : curves) {
    sq += (c - out.mean).array().square().matrix();
  }
  out.stddev = (sq / static_cast<double>(curves.size() - 1)).cwiseSqrt();
  return out;
}

}  // namespace

AlignedVariance UnalignedVarianceOf(const std::vector<Eigen::VectorXd>& curves) {
  CheckCurves(curves);
  return MeanAndStd(curves);
}

AlignedVariance AlignedVarianceOf(const std::vector<Eigen::VectorXd>& curves) {
  CheckCurves(curves);
  const Eigen::VectorXd reference = MeanAndStd(curves).mean;
  std::vector<Eigen::VectorXd> warped;
  warped.reserve(curves.size());
  for (const Eigen::VectorXd& curve : curves) {
    warped.push_back(DtwAlign(reference, curve).warped);
  }
  return MeanAndStd(warped);
}

std::vector<Eigen::VectorXd> JointCurves(const CampaignResult& result,
                                         int joint) {
  if (joint < 1 || joint > result.num_joints()) {
    throw std::out_of_range("joint index out of range");
  }
  std::vector<Eigen::VectorXd> curves;
  for (const SessionOutcome& out : result.sessions) {
    curves.push_back(out.magnitudes.col(joint - 1));
  }
  return curves;
}

void WriteCampaignCsv(const CampaignResult& result, const std::string& path) {
  const int joints = result.num_joints();
  std::vector<std::string> header = {"update"};
  for (int m = 1; m <= joints; ++m) header.push_back("rel_" + std::to_string(m));
  for (int m = 1; m <= joints; ++m) {
    header.push_back("lambda_" + std::to_string(m));
  }
  header.push_back("total_lambda");
  CsvWriter csv(path, header);
  for (int u = 0; u < result.num_updates(); ++u) {
    std::vector<double> row = {static_cast<double>(u + 1)};
    for (int m = 0; m < joints; ++m) row.push_back(result.mean_relative(u, m));
    for (int m = 0; m < joints; ++m) row.push_back(result.mean_magnitude(u, m));
    row.push_back(result.mean_total[u]);
    csv.Row(row);
  }
}

void WriteSessionsCsv(const CampaignResult& result, const std::string& path) {
  CsvWriter csv(path, {"session", "target_index", "seed", "final_distance",
                       "final_cost"});
  for (size_t i = 0; i < result.sessions.size(); ++i) {
    const SessionOutcome& s = result.sessions[i];
    csv.Row(std::vector<std::string>{
        std::to_string(i), std::to_string(s.target_index),
        std::to_string(s.seed), FormatNumber(s.final_distance),
        FormatNumber(s.final_cost)});
  }
}

void WriteAlignedCsv(const AlignedVariance& aligned,
                     const AlignedVariance& unaligned, const std::string& path) {
  CsvWriter csv(path,
                {"update", "mean", "std", "unaligned_mean", "unaligned_std"});
  for (Eigen::Index u = 0; u < aligned.mean.size(); ++u) {
    csv.Row({static_cast<double>(u + 1), aligned.mean[u], aligned.stddev[u],
             unaligned.mean[u], unaligned.stddev[u]});
  }
}

nlohmann::json PeakSummary(const CampaignResult& result) {
  nlohmann::json peaks = nlohmann::json::array();
  for (const PeakRecord& p : result.peaks) {
    peaks.push_back({{"joint", p.joint},
                     {"update", p.update},
                     {"magnitude", p.magnitude},
                     {"never_freed", p.never_freed}});
  }
  Eigen::Index total_peak = 0;
  result.mean_total.maxCoeff(&total_peak);
  return {{"label", result.label},
          {"sessions", result.sessions.size()},
          {"updates", result.num_updates()},
          {"peaks", peaks},
          {"freeing_order", FreeingOrder(result)},
          {"total_exploration_start", result.mean_total[0]},
          {"total_exploration_peak", result.mean_total[total_peak]},
          {"total_exploration_peak_update", total_peak + 1},
          {"total_exploration_end", result.mean_total[result.num_updates() - 1]}};
}

}  // namespace pdff
