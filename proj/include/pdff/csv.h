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

// Minimal headered CSV output shared by every artifact writer.

#ifndef PDFF_CSV_H_
#define PDFF_CSV_H_

#include <fstream>
#include <initializer_list>
#include <string>
#include <vector>

namespace pdff {

// Shortest round-trip representation of a double.
std::string FormatNumber(double value);

class CsvWriter {
 public:
  // Throws std::runtime_error if the file cannot be opened.
  CsvWriter(const std::string& path, const std::vector<std::string>& header);

  void Row(const std::vector<double>& values);
  void Row(const std::vector<std::string>& cells);

 private:
  std::ofstream out_;
  std::string path_;
  size_t columns_;
};

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  // Index of a named column, or throws.
  size_t Column(const std::string& name) const;
  double Number(size_t row, const std::string& name) const;
};

CsvTable ReadCsv(const std::string& path);

}  // namespace pdff

#endif  // PDFF_CSV_H_
