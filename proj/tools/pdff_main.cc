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

// pdff: run reaching campaigns, the static joint analyses and the 2-D
// optimizer demo, writing CSV, JSON and SVG artifacts.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include "pdff/analysis.h"
#include "pdff/config.h"
#include "pdff/csv.h"
#include "pdff/demo.h"
#include "pdff/experiment.h"
#include "pdff/svg.h"

namespace fs = std::filesystem;

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitRuntime = 1;

struct CommonFlags {
  std::string config_file;
  std::vector<std::string> sets;
  std::optional<std::string> output;
  std::optional<int64_t> seed;
  std::optional<std::string> morphology;
  std::optional<int> jobs;
};

void AddCommon(CLI::App* app, CommonFlags& flags) {
  app->add_option("--config", flags.config_file, "key = value config file");
  app->add_option("--set", flags.sets, "override a config key (key=value)");
  app->add_option("--output", flags.output, "output directory");
  app->add_option("--seed", flags.seed, "base random seed");
  app->add_option("--morphology", flags.morphology,
                  "human | equidistant | inverted | all");
  app->add_option("--jobs", flags.jobs, "parallel sessions");
}

// Defaults, then $PDFF_OUTPUT_DIR, then the config file, then flags.
pdff::RunConfig Resolve(const CommonFlags& flags,
                        const std::vector<std::pair<std::string, std::string>>&
                            extra) {
  pdff::RunConfig config;
  if (const char* dir = std::getenv("PDFF_OUTPUT_DIR"); dir && *dir) {
    config.output_dir = dir;
  }
  if (!flags.config_file.empty()) pdff::LoadConfigFile(flags.config_file, config);
  for (const std::string& kv : flags.sets) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) {
      throw pdff::ConfigError(kv, "--set expects key=value");
    }
    config.Set(kv.substr(0, eq), kv.substr(eq + 1));
  }
  if (flags.output) config.Set("output_dir", *flags.output);
  if (flags.seed) config.Set("seed", std::to_string(*flags.seed));
  if (flags.morphology) config.Set("morphology", *flags.morphology);
  if (flags.jobs) config.Set("jobs", std::to_string(*flags.jobs));
  for (const auto& [key, value] : extra) config.Set(key, value);
  config.Validate();
  return config;
}

fs::path PrepareOutput(const pdff::RunConfig& config) {
  const fs::path dir(config.output_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) {
    throw std::runtime_error("cannot create output directory '" +
                             config.output_dir + "'");
  }
  return dir;
}

void WriteJson(const fs::path& path, const nlohmann::json& json) {
  pdff::WriteTextFile(path.string(), json.dump(2) + "\n");
}

void WriteManifest(const fs::path& dir, const std::string& command,
                   const pdff::RunConfig& config,
                   const std::vector<std::string>& files) {
  WriteJson(dir / "manifest.json", {{"command", command},
                                     {"config", config.ToJson()},
                                     {"files", files}});
}

// Renders an SVG from the CSV that was just written next to it.
template <typename Renderer>
void RenderFromCsv(const fs::path& csv, const fs::path& svg,
                   const std::string& title, Renderer render) {
  pdff::WriteTextFile(svg.string(), render(pdff::ReadCsv(csv.string()), title));
}

int CmdOptimize(const pdff::RunConfig& config) {
  const fs::path dir = PrepareOutput(config);
  const pdff::TargetSet targets = pdff::DefaultTargets(config.targets);
  std::vector<std::string> files = {"targets.csv"};
  pdff::WriteTargetsCsv(targets, (dir / "targets.csv").string());
  nlohmann::json summary = nlohmann::json::object();

  for (pdff::Morphology m : config.SelectedMorphologies()) {
    const std::string name(pdff::MorphologyName(m));
    std::cerr << "optimize: " << name << " (" << targets.size() << " targets x "
              << config.sessions_per_target << " sessions)\n";
    const pdff::CampaignResult result =
        pdff::RunCampaign(config.Arm(m), targets, config.Campaign(), name);

    const fs::path csv = dir / (name + "_exploration.csv");
    pdff::WriteCampaignCsv(result, csv.string());
    pdff::WriteSessionsCsv(result, (dir / (name + "_sessions.csv")).string());
    WriteJson(dir / (name + "_peaks.json"), pdff::PeakSummary(result));
    RenderFromCsv(csv, dir / (name + "_exploration.svg"),
                  name + " arm: exploration", pdff::RenderExplorationSvg);
    files.insert(files.end(), {name + "_exploration.csv", name + "_sessions.csv",
                               name + "_peaks.json", name + "_exploration.svg"});

    if (result.sessions.size() >= 2) {
      const auto curves = pdff::JointCurves(result, 1);
      const fs::path aligned = dir / (name + "_aligned_joint1.csv");
      pdff::WriteAlignedCsv(pdff::AlignedVarianceOf(curves),
                            pdff::UnalignedVarianceOf(curves), aligned.string());
      RenderFromCsv(aligned, dir / (name + "_aligned_joint1.svg"),
                    name + " arm: joint 1 after DTW alignment",
                    pdff::RenderBandSvg);
      files.insert(files.end(),
                   {name + "_aligned_joint1.csv", name + "_aligned_joint1.svg"});
    }
    summary[name] = pdff::PeakSummary(result);
  }
  WriteJson(dir / "summary.json", summary);
  files.push_back("summary.json");
  WriteManifest(dir, "optimize", config, files);
  std::cout << summary.dump(2) << "\n";
  return 0;
}

int CmdAnalyze(const pdff::RunConfig& config, const std::string& which) {
  const fs::path dir = PrepareOutput(config);
  const pdff::TargetSet targets = pdff::DefaultTargets(config.targets);
  std::vector<std::string> labels;
  for (pdff::Morphology m : config.SelectedMorphologies()) {
    labels.emplace_back(pdff::MorphologyName(m));
  }
  const pdff::StaticCostOptions cost{config.analysis_include_comfort};
  std::vector<std::string> files;
  if (which == "sensitivity") {
    std::vector<pdff::SensitivityReport> reports;
    for (pdff::Morphology m : config.SelectedMorphologies()) {
      reports.push_back(pdff::Sensitivity(config.Arm(m), targets,
                                          config.analysis_perturbation, cost));
    }
    const fs::path csv = dir / "sensitivity.csv";
    pdff::WriteSensitivityCsv(labels, reports, csv.string());
    RenderFromCsv(csv, dir / "sensitivity.svg", "single-joint sensitivity",
                  pdff::RenderGroupedBarsSvg);
    files = {"sensitivity.csv", "sensitivity.svg"};
    std::cout << pdff::ReadCsv(csv.string()).rows.size() << " morphologies\n";
  } else {
    std::vector<pdff::InteractionReport> reports;
    for (pdff::Morphology m : config.SelectedMorphologies()) {
      reports.push_back(pdff::InteractionRatios(config.Arm(m), targets,
                                                config.Interaction(), config.seed));
    }
    const fs::path csv = dir / "interaction.csv";
    pdff::WriteInteractionCsv(labels, reports, csv.string());
    const nlohmann::json summary = pdff::InteractionSummary(labels, reports);
    WriteJson(dir / "interaction.json", summary);
    RenderFromCsv(csv, dir / "interaction.svg",
                  "ratio of unchanged cost rankings", pdff::RenderInteractionSvg);
    files = {"interaction.csv", "interaction.json", "interaction.svg"};
    for (size_t i = 0; i < labels.size(); ++i) {
      std::cout << labels[i] << " median " << reports[i].median << "\n";
    }
  }
  WriteManifest(dir, "analyze " + which, config, files);
  return 0;
}

int CmdDemo(const pdff::RunConfig& config, const pdff::DemoConfig& demo) {
  const fs::path dir = PrepareOutput(config);
  const auto snapshots = pdff::RunDemo(demo, config.seed);
  const fs::path csv = dir / "demo_snapshots.csv";
  pdff::WriteDemoCsv(snapshots, csv.string());
  RenderFromCsv(csv, dir / "demo.svg", "search distribution on J = |theta|",
                pdff::RenderDemoSvg);
  nlohmann::json manifest_config = config.ToJson();
  manifest_config["demo"] = {
      {"start_mean", {demo.start_mean.x(), demo.start_mean.y()}},
      {"samples", demo.optimizer.samples_per_update},
      {"eliteness", demo.optimizer.eliteness},
      {"lambda_init", demo.optimizer.lambda_init},
      {"lambda_min", demo.optimizer.lambda_min},
      {"updates", demo.optimizer.updates}};
  WriteJson(dir / "manifest.json",
            {{"command", "demo"},
             {"config", manifest_config},
             {"files", {"demo_snapshots.csv", "demo.svg"}}});
  std::cout << "final mean cost " << snapshots.back().cost << "\n";
  return 0;
}

// Re-renders every figure whose CSV is present in `input`.
int CmdPlot(const std::string& input) {
  const fs::path dir(input);
  if (!fs::is_directory(dir)) {
    throw std::runtime_error("no such directory '" + input + "'");
  }
  int rendered = 0;
  for (pdff::Morphology m : pdff::AllMorphologies()) {
    const std::string name(pdff::MorphologyName(m));
    if (fs::exists(dir / (name + "_exploration.csv"))) {
      RenderFromCsv(dir / (name + "_exploration.csv"),
                    dir / (name + "_exploration.svg"),
                    name + " arm: exploration", pdff::RenderExplorationSvg);
      ++rendered;
    }
    if (fs::exists(dir / (name + "_aligned_joint1.csv"))) {
      RenderFromCsv(dir / (name + "_aligned_joint1.csv"),
                    dir / (name + "_aligned_joint1.svg"),
                    name + " arm: joint 1 after DTW alignment",
                    pdff::RenderBandSvg);
      ++rendered;
    }
  }
  if (fs::exists(dir / "sensitivity.csv")) {
    RenderFromCsv(dir / "sensitivity.csv", dir / "sensitivity.svg",
                  "single-joint sensitivity", pdff::RenderGroupedBarsSvg);
    ++rendered;
  }
  if (fs::exists(dir / "interaction.csv")) {
    RenderFromCsv(dir / "interaction.csv", dir / "interaction.svg",
                  "ratio of unchanged cost rankings", pdff::RenderInteractionSvg);
    ++rendered;
  }
  if (fs::exists(dir / "demo_snapshots.csv")) {
    RenderFromCsv(dir / "demo_snapshots.csv", dir / "demo.svg",
                  "search distribution on J = |theta|", pdff::RenderDemoSvg);
    ++rendered;
  }
  std::cout << rendered << " figures rendered\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Proximodistal exploration with PI-BB on planar reaching arms"};
  app.require_subcommand(1);

  CommonFlags optimize_flags;
  std::optional<int> updates, sessions, trials;
  std::optional<double> eliteness, lambda;
  CLI::App* optimize = app.add_subcommand("optimize", "run reaching campaigns");
  AddCommon(optimize, optimize_flags);
  optimize->add_option("--updates", updates, "updates per session");
  optimize->add_option("--sessions-per-target", sessions, "sessions per target");
  optimize->add_option("--trials", trials, "rollouts per update (K)");
  optimize->add_option("--eliteness", eliteness, "eliteness h");
  optimize->add_option("--lambda", lambda, "initial and minimum exploration");

  CommonFlags analyze_flags;
  std::string which;
  std::optional<int64_t> samples;
  std::optional<double> sigma;
  CLI::App* analyze = app.add_subcommand("analyze", "static joint analyses");
  AddCommon(analyze, analyze_flags);
  analyze->add_option("which", which, "sensitivity | interaction")
      ->required()
      ->check(CLI::IsMember({"sensitivity", "interaction"}));
  analyze->add_option("--samples", samples, "samples per target (interaction)");
  analyze->add_option("--sigma", sigma, "perturbation standard deviation");

  CommonFlags demo_flags;
  std::optional<int> demo_updates;
  double start_x = 10.0, start_y = 10.0;
  CLI::App* demo = app.add_subcommand("demo", "2-D optimizer illustration");
  AddCommon(demo, demo_flags);
  demo->add_option("--updates", demo_updates, "number of updates");
  demo->add_option("--start-x", start_x, "initial mean x");
  demo->add_option("--start-y", start_y, "initial mean y");

  std::string plot_input;
  CLI::App* plot = app.add_subcommand("plot", "re-render SVGs from CSVs");
  plot->add_option("--input", plot_input, "directory with CSV outputs")
      ->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (optimize->parsed()) {
      std::vector<std::pair<std::string, std::string>> extra;
      if (updates) extra.emplace_back("optimizer.updates", std::to_string(*updates));
      if (sessions) extra.emplace_back("sessions_per_target", std::to_string(*sessions));
      if (trials) extra.emplace_back("optimizer.samples", std::to_string(*trials));
      if (eliteness) extra.emplace_back("optimizer.eliteness", pdff::FormatNumber(*eliteness));
      if (lambda) {
        extra.emplace_back("optimizer.lambda_init", pdff::FormatNumber(*lambda));
        extra.emplace_back("optimizer.lambda_min", pdff::FormatNumber(*lambda));
      }
      return CmdOptimize(Resolve(optimize_flags, extra));
    }
    if (analyze->parsed()) {
      std::vector<std::pair<std::string, std::string>> extra;
      if (samples) extra.emplace_back("analysis.samples", std::to_string(*samples));
      if (sigma) extra.emplace_back("analysis.sigma", pdff::FormatNumber(*sigma));
      return CmdAnalyze(Resolve(analyze_flags, extra), which);
    }
    if (demo->parsed()) {
      const pdff::RunConfig config = Resolve(demo_flags, {});
      pdff::DemoConfig demo_config;
      demo_config.start_mean = {start_x, start_y};
      if (demo_updates) demo_config.optimizer.updates = *demo_updates;
      try {
        demo_config.optimizer.Validate();
      } catch (const std::invalid_argument& e) {
        throw pdff::ConfigError("updates", e.what());
      }
      return CmdDemo(config, demo_config);
    }
    return CmdPlot(plot_input);
  } catch (const pdff::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
}
