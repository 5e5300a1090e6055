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

// Standalone SVG charts. Every renderer takes the CSV table it plots, so a
// figure never shows anything that is not in its sibling CSV file.

#ifndef PDFF_SVG_H_
#define PDFF_SVG_H_

#include <string>

#include "pdff/csv.h"

namespace pdff {

// Stacked relative exploration (rel_* columns), the total exploration line
// (total_lambda, right axis) and a bar at each joint's peak.
std::string RenderExplorationSvg(const CsvTable& campaign,
                                 const std::string& title);

// Mean +- std band from the update/mean/std columns.
std::string RenderBandSvg(const CsvTable& aligned, const std::string& title);

// Rows are groups (first column is the label), joint_* columns are bars.
std::string RenderGroupedBarsSvg(const CsvTable& table,
                                 const std::string& title);

// morphology/proximal/distal/ratio rows, one panel per morphology.
std::string RenderInteractionSvg(const CsvTable& table,
                                 const std::string& title);

// 2-D search distribution snapshots: mean path plus one-sigma ellipses.
std::string RenderDemoSvg(const CsvTable& snapshots, const std::string& title);

void WriteTextFile(const std::string& path, const std::string& content);

}  // namespace pdff

#endif  // PDFF_SVG_H_
