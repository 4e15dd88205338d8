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

#include "fluxswap/series.hpp"

#include <cmath>
#include <cstdio>
#include <deque>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace fluxswap::experiments {

namespace {

void put_number(std::ostream& os, double v) {
  if (std::isnan(v)) {
    os << "NaN";
    return;
  }
  if (std::isinf(v)) {
    os << (v > 0 ? "inf" : "-inf");
    return;
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v == 0.0 ? 0.0 : v);
  os << buf;
}

}  // namespace

std::size_t SeriesTable::column_index(const std::string& c) const {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i] == c) return i;
  }
  throw std::out_of_range("table '" + name + "' has no column '" + c + "'");
}

std::vector<double> SeriesTable::column(const std::string& c) const {
  return column(column_index(c));
}

std::vector<double> SeriesTable::column(std::size_t index) const {
  std::vector<double> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(r.at(index));
  return out;
}

void SeriesTable::add_row(std::vector<double> row) {
  if (row.size() != columns.size()) {
    throw std::invalid_argument("row width " + std::to_string(row.size()) + " does not match " +
                                std::to_string(columns.size()) + " columns");
  }
  if (!rows.empty() && !(row.front() > rows.back().front())) {
    throw std::invalid_argument("table '" + name + "': times must increase strictly");
  }
  rows.push_back(std::move(row));
}

void write_csv(const SeriesTable& table, std::ostream& os) {
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    os << (i ? "," : "") << table.columns[i];
  }
  os << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << ',';
      put_number(os, row[i]);
    }
    os << '\n';
  }
}

std::string to_csv(const SeriesTable& table) {
  std::ostringstream os;
  write_csv(table, os);
  return os.str();
}

void write_csv_file(const SeriesTable& table, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  write_csv(table, out);
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

SeriesTable envelope(const std::vector<double>& times, const std::vector<double>& values,
                     std::size_t window, const std::string& label) {
  if (times.size() != values.size()) throw std::invalid_argument("envelope: size mismatch");
  if (window < 3) throw std::invalid_argument("envelope window must be at least 3 samples");
  if (window > values.size()) {
    throw std::invalid_argument("envelope window " + std::to_string(window) +
                                " exceeds series length " + std::to_string(values.size()));
  }
  SeriesTable out;
  out.name = label + "_envelope";
  out.columns = {"omega_r_t", label + "_envelope"};
  // monotone deque of indices, NaN entries skipped
  std::deque<std::size_t> q;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isnan(values[i])) {
      while (!q.empty() && values[q.back()] <= values[i]) q.pop_back();
      q.push_back(i);
    }
    if (i + 1 < window) continue;
    const std::size_t lo = i + 1 - window;
    while (!q.empty() && q.front() < lo) q.pop_front();
    const double center = 0.5 * (times[lo] + times[i]);
    const double peak = q.empty() ? std::numeric_limits<double>::quiet_NaN() : values[q.front()];
    out.rows.push_back({center, peak});
  }
  return out;
}

SeriesTable envelope(const SeriesTable& table, const std::string& column, std::size_t window) {
  SeriesTable out = envelope(table.column(0), table.column(column), window, column);
  out.name = table.name + "_" + column + "_envelope";
  return out;
}

}  // namespace fluxswap::experiments
