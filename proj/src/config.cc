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

#include "pdff/config.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace pdff {

namespace {

std::string Trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

double ParseDouble(const std::string& key, const std::string& value) {
  try {
    size_t used = 0;
    const double out = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return out;
  } catch (const std::exception&) {
    throw ConfigError(key, "expected a number, got '" + value + "'");
  }
}

int64_t ParseInt(const std::string& key, const std::string& value) {
  int64_t out = 0;
  auto [end, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || end != value.data() + value.size()) {
    throw ConfigError(key, "expected an integer, got '" + value + "'");
  }
  return out;
}

bool ParseBool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  throw ConfigError(key, "expected true/false, got '" + value + "'");
}

std::vector<double> ParseList(const std::string& key, const std::string& value) {
  std::vector<double> out;
  std::stringstream stream(value);
  std::string item;
  while (std::getline(stream, item, ',')) out.push_back(ParseDouble(key, Trim(item)));
  if (out.empty()) throw ConfigError(key, "expected a comma-separated list");
  return out;
}

std::string LinksKey(Morphology m) {
  return "links." + std::string(MorphologyName(m));
}

}  // namespace

const std::vector<std::string>& RunConfig::Keys() {
  static const std::vector<std::string> kKeys = {
      "morphology", "links.human", "links.equidistant", "links.inverted",
      "optimizer.samples", "optimizer.eliteness", "optimizer.lambda_init",
      "optimizer.lambda_min", "optimizer.updates", "basis.count",
      "basis.width", "basis.duration", "dt", "cost.distance_weight",
      "cost.comfort_weight", "cost.acceleration_weight", "cost.comfort_abs",
      "targets.inner_radius", "targets.outer_radius", "targets.min_angle_deg",
      "targets.max_angle_deg", "targets.points_per_arc", "targets.min_radius",
      "sessions_per_target", "seed", "jobs", "output_dir", "analysis.samples",
      "analysis.perturbation", "analysis.sigma", "analysis.include_comfort"};
  return kKeys;
}

void RunConfig::Set(const std::string& key, const std::string& raw) {
  const std::string value = Trim(raw);
  if (key == "morphology") {
    if (value != "all") {
      try {
        ParseMorphology(value);
      } catch (const std::invalid_argument& e) {
        throw ConfigError(key, e.what());
      }
    }
    morphology = value;
  } else if (key.rfind("links.", 0) == 0) {
    Morphology m;
    try {
      m = ParseMorphology(key.substr(6));
    } catch (const std::invalid_argument&) {
      throw ConfigError(key, "unknown morphology");
    }
    links[m] = ParseList(key, value);
  } else if (key == "optimizer.samples") {
    optimizer.samples_per_update = static_cast<int>(ParseInt(key, value));
  } else if (key == "optimizer.eliteness") {
    optimizer.eliteness = ParseDouble(key, value);
  } else if (key == "optimizer.lambda_init") {
    optimizer.lambda_init = ParseDouble(key, value);
  } else if (key == "optimizer.lambda_min") {
    optimizer.lambda_min = ParseDouble(key, value);
  } else if (key == "optimizer.updates") {
    optimizer.updates = static_cast<int>(ParseInt(key, value));
  } else if (key == "basis.count") {
    basis_count = static_cast<int>(ParseInt(key, value));
  } else if (key == "basis.width") {
    basis_width = ParseDouble(key, value);
  } else if (key == "basis.duration") {
    duration = ParseDouble(key, value);
  } else if (key == "dt") {
    dt = ParseDouble(key, value);
  } else if (key == "cost.distance_weight") {
    cost.distance = ParseDouble(key, value);
  } else if (key == "cost.comfort_weight") {
    cost.comfort = ParseDouble(key, value);
  } else if (key == "cost.acceleration_weight") {
    cost.acceleration = ParseDouble(key, value);
  } else if (key == "cost.comfort_abs") {
    cost.comfort_uses_magnitude = ParseBool(key, value);
  } else if (key == "targets.inner_radius") {
    targets.inner_radius = ParseDouble(key, value);
  } else if (key == "targets.outer_radius") {
    targets.outer_radius = ParseDouble(key, value);
  } else if (key == "targets.min_angle_deg") {
    targets.min_angle_deg = ParseDouble(key, value);
  } else if (key == "targets.max_angle_deg") {
    targets.max_angle_deg = ParseDouble(key, value);
  } else if (key == "targets.points_per_arc") {
    targets.points_per_arc = static_cast<int>(ParseInt(key, value));
  } else if (key == "targets.min_radius") {
    targets.min_radius = ParseDouble(key, value);
  } else if (key == "sessions_per_target") {
    sessions_per_target = static_cast<int>(ParseInt(key, value));
  } else if (key == "seed") {
    const int64_t s = ParseInt(key, value);
    if (s < 0) throw ConfigError(key, "must be >= 0");
    seed = static_cast<uint64_t>(s);
  } else if (key == "jobs") {
    jobs = static_cast<int>(ParseInt(key, value));
  } else if (key == "output_dir") {
    if (value.empty()) throw ConfigError(key, "must not be empty");
    output_dir = value;
  } else if (key == "analysis.samples") {
    analysis_samples = static_cast<int>(ParseInt(key, value));
  } else if (key == "analysis.perturbation") {
    analysis_perturbation = ParseDouble(key, value);
  } else if (key == "analysis.sigma") {
    analysis_sigma = ParseDouble(key, value);
  } else if (key == "analysis.include_comfort") {
    analysis_include_comfort = ParseBool(key, value);
  } else {
    throw ConfigError(key, "unknown key");
  }
}

void RunConfig::Validate() const {
  auto positive = [](const std::string& key, double v) {
    if (!(v > 0)) throw ConfigError(key, "must be positive");
  };
  if (optimizer.samples_per_update < 2) {
    throw ConfigError("optimizer.samples", "must be >= 2");
  }
  if (!(optimizer.eliteness >= 0)) {
    throw ConfigError("optimizer.eliteness", "must be >= 0");
  }
  positive("optimizer.lambda_init", optimizer.lambda_init);
  if (!(optimizer.lambda_min >= 0)) {
    throw ConfigError("optimizer.lambda_min", "must be >= 0");
  }
  if (optimizer.updates < 1) throw ConfigError("optimizer.updates", "must be >= 1");
  if (basis_count < 1) throw ConfigError("basis.count", "must be >= 1");
  positive("basis.width", basis_width);
  positive("basis.duration", duration);
  positive("dt", dt);
  try {
    NumSteps(duration, dt);
  } catch (const std::invalid_argument& e) {
    throw ConfigError("dt", e.what());
  }
  if (!(cost.distance >= 0)) throw ConfigError("cost.distance_weight", "must be >= 0");
  if (!(cost.acceleration >= 0)) {
    throw ConfigError("cost.acceleration_weight", "must be >= 0");
  }
  if (sessions_per_target < 1) throw ConfigError("sessions_per_target", "must be >= 1");
  if (jobs < 1) throw ConfigError("jobs", "must be >= 1");
  if (analysis_samples < 1) throw ConfigError("analysis.samples", "must be >= 1");
  positive("analysis.perturbation", analysis_perturbation);
  if (!(analysis_sigma >= 0)) throw ConfigError("analysis.sigma", "must be >= 0");
  for (const auto& [m, lengths] : links) {
    try {
      ArmModel arm(lengths);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(LinksKey(m), e.what());
    }
  }
  try {
    DefaultTargets(targets);
  } catch (const std::invalid_argument& e) {
    throw ConfigError("targets", e.what());
  }
}

std::vector<Morphology> RunConfig::SelectedMorphologies() const {
  if (morphology == "all") return AllMorphologies();
  return {ParseMorphology(morphology)};
}

ArmModel RunConfig::Arm(Morphology m) const { return ArmModel(links.at(m)); }

BasisFunctionSet RunConfig::Basis() const {
  return BasisFunctionSet(basis_count, basis_width, duration);
}

CampaignConfig RunConfig::Campaign() const {
  CampaignConfig c;
  c.optimizer = optimizer;
  c.basis = Basis();
  c.dt = dt;
  c.cost = cost;
  c.sessions_per_target = sessions_per_target;
  c.base_seed = seed;
  c.jobs = jobs;
  return c;
}

InteractionOptions RunConfig::Interaction() const {
  InteractionOptions o;
  o.samples_per_target = analysis_samples;
  o.proximal_sigma = analysis_sigma;
  o.distal_sigma = analysis_sigma;
  o.cost.include_comfort = analysis_include_comfort;
  return o;
}

nlohmann::json RunConfig::ToJson() const {
  nlohmann::json links_json = nlohmann::json::object();
  for (const auto& [m, lengths] : links) {
    links_json[std::string(MorphologyName(m))] = lengths;
  }
  return {
      {"morphology", morphology},
      {"links", links_json},
      {"optimizer",
       {{"samples", optimizer.samples_per_update},
        {"eliteness", optimizer.eliteness},
        {"lambda_init", optimizer.lambda_init},
        {"lambda_min", optimizer.lambda_min},
        {"updates", optimizer.updates}}},
      {"basis",
       {{"count", basis_count}, {"width", basis_width}, {"duration", duration}}},
      {"dt", dt},
      {"cost",
       {{"distance_weight", cost.distance},
        {"comfort_weight", cost.comfort},
        {"acceleration_weight", cost.acceleration},
        {"comfort_abs", cost.comfort_uses_magnitude}}},
      {"targets",
       {{"inner_radius", targets.inner_radius},
        {"outer_radius", targets.outer_radius},
        {"min_angle_deg", targets.min_angle_deg},
        {"max_angle_deg", targets.max_angle_deg},
        {"points_per_arc", targets.points_per_arc},
        {"min_radius", targets.min_radius}}},
      {"sessions_per_target", sessions_per_target},
      {"seed", seed},
      {"jobs", jobs},
      {"output_dir", output_dir},
      {"analysis",
       {{"samples", analysis_samples},
        {"perturbation", analysis_perturbation},
        {"sigma", analysis_sigma},
        {"include_comfort", analysis_include_comfort}}}};
}

void LoadConfigFile(const std::string& path, RunConfig& config) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config", "cannot read '" + path + "'");
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = Trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config", path + ":" + std::to_string(number) +
                                      ": expected key = value");
    }
    config.Set(Trim(line.substr(0, eq)), line.substr(eq + 1));
  }
}

}  // namespace pdff
