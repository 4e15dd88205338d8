// Copyright 2026 The fluxswap Authors
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

#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace fluxswap::experiments {

/// Column-oriented data behind one figure panel. The first column is always
/// omega_R t; NaN cells mark undefined points.
struct SeriesTable {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  std::size_t column_index(const std::string& column) const;
  std::vector<double> column(const std::string& column) const;
  std::vector<double> column(std::size_t index) const;
  void add_row(std::vector<double> row);

  friend bool operator==(const SeriesTable&, const SeriesTable&) = default;
};

/// Header row, comma separated, '.' decimal, the literal NaN for missing cells.
void write_csv(const SeriesTable& table, std::ostream& os);
std::string to_csv(const SeriesTable& table);
void write_csv_file(const SeriesTable& table, const std::filesystem::path& path);

/// Sliding maximum of `column` over `window` consecutive samples, NaN
/// ignored, one row per window position (time of the window center).
/// Columns: omega_r_t, <column>_envelope. Throws std::invalid_argument when
/// window < 3 or exceeds the number of rows.
SeriesTable envelope(const SeriesTable& table, const std::string& column, std::size_t window);

/// Same over explicit time and value arrays.
SeriesTable envelope(const std::vector<double>& times, const std::vector<double>& values,
                     std::size_t window, const std::string& label = "value");

}  // namespace fluxswap::experiments
