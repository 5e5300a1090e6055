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

// Run configuration: plain-text `key = value` files, overridable per key.
//
//   # comment
//   morphology = human            # human | equidistant | inverted | all
//   links.human = 0.30, 0.27, 0.16, 0.12, 0.08, 0.07
//   optimizer.samples = 20
//
// Every key is listed in RunConfig::Keys().

#ifndef PDFF_CONFIG_H_
#define PDFF_CONFIG_H_

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pdff/analysis.h"
#include "pdff/arm.h"
#include "pdff/experiment.h"

namespace pdff {

// Carries the offending key so front ends can report it.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string key, const std::string& message)
      : std::runtime_error("config key '" + key + "': " + message),
        key_(std::move(key)) {}
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

struct RunConfig {
  std::string morphology = "human";
  std::map<Morphology, std::vector<double>> links = {
      {Morphology::kHuman, DefaultLinkLengths(Morphology::kHuman)},
      {Morphology::kEquidistant, DefaultLinkLengths(Morphology::kEquidistant)},
      {Morphology::kInvertedHuman,
       DefaultLinkLengths(Morphology::kInvertedHuman)}};

  OptimizerConfig optimizer;
  int basis_count = 5;
  double basis_width = 0.05;
  double duration = 0.5;
  double dt = 0.01;
  CostWeights cost;
  TargetLayout targets;

  int sessions_per_target = 10;
  uint64_t seed = 0;
  int jobs = 1;
  std::string output_dir = "pdff_out";

  int analysis_samples = 100;
  double analysis_perturbation = 3.14159265358979323846 / 10;
  double analysis_sigma = 3.14159265358979323846 / 10;
  bool analysis_include_comfort = false;

  // Sets one key from its textual value. Throws ConfigError.
  void Set(const std::string& key, const std::string& value);
  // Checks ranges; throws ConfigError naming the first bad key.
  void Validate() const;

  std::vector<Morphology> SelectedMorphologies() const;
  ArmModel Arm(Morphology morphology) const;
  BasisFunctionSet Basis() const;
  CampaignConfig Campaign() const;
  InteractionOptions Interaction() const;

  nlohmann::json ToJson() const;
  static const std::vector<std::string>& Keys();
};

// Applies every `key = value` line of the file on top of `config`.
void LoadConfigFile(const std::string& path, RunConfig& config);

}  // namespace pdff

#endif  // PDFF_CONFIG_H_
