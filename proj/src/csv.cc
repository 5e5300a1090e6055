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

#include "pdff/csv.h"

#include <charconv>
#include <sstream>
#include <stdexcept>

namespace pdff {

std::string FormatNumber(double value) {
  char buffer[64];
  auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  if (ec != std::errc()) throw std::runtime_error("number formatting failed");
  return std::string(buffer, end);
}

CsvWriter::CsvWriter(const std::string& path,
                     const std::vector<std::string>& header)
    : out_(path), path_(path), columns_(header.size()) {
  if (!out_) throw std::runtime_error("cannot open '" + path + "' for writing");
  Row(header);
}

void CsvWriter::Row(const std::vector<double>& values) {
  std::vector<std::string> cells;
  cells.reserve(values.size());
  for (double v : values) cells.push_back(FormatNumber(v));
  Row(cells);
}

void CsvWriter::Row(const std::vector<std::string>& cells) {
  if (cells.size() != columns_) {
    throw std::logic_error("row width mismatch in " + path_);
  }
  for (size_t i = 0; i < cells.size(); ++i) {
    if (i) out_ << ',';
    out_ << cells[i];
  }
  out_ << '\n';
  if (!out_) throw std::runtime_error("write failed: " + path_);
}

size_t CsvTable::Column(const std::string& name) const {
  for (size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return i;
  }
  throw std::out_of_range("no column '" + name + "'");
}

double CsvTable::Number(size_t row, const std::string& name) const {
  return std::stod(rows.at(row).at(Column(name)));
}

namespace {

std::vector<std::string> SplitLine(const std::string& line) {
  std::vector<std::string> cells;
  std::stringstream stream(line);
  std::string cell;
  while (std::getline(stream, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

}  // namespace

CsvTable ReadCsv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  CsvTable table;
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("empty csv: " + path);
  table.header = SplitLine(line);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    table.rows.push_back(SplitLine(line));
  }
  return table;
}

}  // namespace pdff
