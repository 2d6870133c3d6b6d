// Copyright 2026 ququart-sim contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QUQUART_CSV_HPP
#define QUQUART_CSV_HPP

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "ququart/qcore.hpp"

namespace ququart {

inline constexpr const char* kVersion = "1.0.0";

// Nine significant digits.
std::string format_double(double x);

class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& out) : out_(out) {}

  // "# <text>" line.
  void comment(const std::string& text);
  // "# ququart <version> <command> seed=<seed> key=value ..." line.
  void provenance(const std::string& command, const std::map<std::string, std::string>& config, uint64_t seed);
  void header(const std::vector<std::string>& columns);
  void row(const std::vector<std::string>& cells);
  void row(const std::vector<double>& values);

 private:
  std::ostream& out_;
  size_t columns_ = 0;
};

// Long format: row, col, re, im.
void write_matrix(CsvWriter& csv, const Matrix& m);
void write_matrix(CsvWriter& csv, const RealMatrix& m, const std::vector<std::string>& row_labels,
                  const std::vector<std::string>& column_labels);

}  // namespace ququart

#endif  // QUQUART_CSV_HPP
