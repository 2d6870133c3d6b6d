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

#include "ququart/csv.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace ququart {

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.9g", x);
  return buf;
}

void CsvWriter::comment(const std::string& text) { out_ << "# " << text << '\n'; }

void CsvWriter::provenance(const std::string& command, const std::map<std::string, std::string>& config,
                           uint64_t seed) {
  out_ << "# ququart " << kVersion << ' ' << command << " seed=" << seed;
  for (const auto& [k, v] : config) {
    std::string value = v;
    std::replace(value.begin(), value.end(), '\n', ',');
    out_ << ' ' << k << '=' << value;
  }
  out_ << '\n';
}

void CsvWriter::header(const std::vector<std::string>& columns) {
  columns_ = columns.size();
  row(columns);
}

void CsvWriter::row(const std::vector<std::string>& cells) {
  if (columns_ != 0 && cells.size() != columns_) {
    throw std::logic_error("CSV row width does not match the header");
  }
  for (size_t i = 0; i < cells.size(); ++i) out_ << (i ? "," : "") << cells[i];
  out_ << '\n';
}

void CsvWriter::row(const std::vector<double>& values) {
  std::vector<std::string> cells;
  for (double v : values) cells.push_back(format_double(v));
  row(cells);
}

void write_matrix(CsvWriter& csv, const Matrix& m) {
  csv.header({"row", "col", "re", "im"});
  for (Eigen::Index j = 0; j < m.rows(); ++j) {
    for (Eigen::Index k = 0; k < m.cols(); ++k) {
      csv.row({std::to_string(j), std::to_string(k), format_double(m(j, k).real()), format_double(m(j, k).imag())});
    }
  }
}

void write_matrix(CsvWriter& csv, const RealMatrix& m, const std::vector<std::string>& row_labels,
                  const std::vector<std::string>& column_labels) {
  if (row_labels.size() != static_cast<size_t>(m.rows()) || column_labels.size() != static_cast<size_t>(m.cols())) {
    throw std::invalid_argument("matrix labels do not match its shape");
  }
  std::vector<std::string> head = {""};
  head.insert(head.end(), column_labels.begin(), column_labels.end());
  csv.header(head);
  for (Eigen::Index j = 0; j < m.rows(); ++j) {
    std::vector<std::string> cells = {row_labels[static_cast<size_t>(j)]};
    for (Eigen::Index k = 0; k < m.cols(); ++k) cells.push_back(format_double(m(j, k)));
    csv.row(cells);
  }
}

}  // namespace ququart
