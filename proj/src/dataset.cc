// Copyright 2026 The mlpsol Authors
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

#include "mlpsol/dataset.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <random>
#include <sstream>

#include "mlpsol/decimal.h"
#include "mlpsol/error.h"
#include "mlpsol/io.h"

namespace mlpsol {
namespace {

std::vector<std::string_view> SplitLine(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    cells.push_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return cells;
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::string Where(std::size_t line) { return "csv line " + std::to_string(line); }

// Uniform integer in [0, bound) without modulo bias; std distributions are
// implementation-defined and would make splits platform-dependent.
std::uint64_t Bounded(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return v % bound;
}

Dataset Subset(const Dataset& data, const std::vector<std::size_t>& order,
               std::size_t begin, std::size_t end) {
  Dataset out;
  out.feature_names = data.feature_names;
  for (std::size_t k = begin; k < end; ++k) {
    out.features.push_back(data.features[order[k]]);
    out.labels.push_back(data.labels[order[k]]);
  }
  return out;
}

}  // namespace

void ValidateDataset(const Dataset& data) {
  if (data.features.size() != data.labels.size()) {
    throw ValidationError("dataset: feature rows and labels differ in count");
  }
  for (std::size_t r = 0; r < data.rows(); ++r) {
    if (data.features[r].size() != data.dim()) {
      throw ValidationError("dataset row " + std::to_string(r) + ": expected " +
                            std::to_string(data.dim()) + " features, got " +
                            std::to_string(data.features[r].size()));
    }
    if (data.labels[r] != 0 && data.labels[r] != 1) {
      throw ValidationError("dataset row " + std::to_string(r) + ": label must be 0 or 1");
    }
  }
}

Dataset ParseCsv(std::string_view text) {
  Dataset data;
  std::size_t line_no = 0;
  bool header_seen = false;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    const std::string_view line = Trim(text.substr(pos, nl - pos));
    pos = nl + 1;
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string_view> cells = SplitLine(line);
    for (auto& c : cells) c = Trim(c);
    if (!header_seen) {
      header_seen = true;
      if (cells.size() < 2 || cells.back() != "label") {
        throw ValidationError(Where(line_no) +
                              ": header must list feature columns then 'label'");
      }
      for (std::size_t i = 0; i + 1 < cells.size(); ++i) {
        data.feature_names.emplace_back(cells[i]);
      }
      continue;
    }
    if (cells.size() != data.dim() + 1) {
      throw ValidationError(Where(line_no) + ": expected " + std::to_string(data.dim() + 1) +
                            " columns, got " + std::to_string(cells.size()));
    }
    std::vector<double> row;
    row.reserve(data.dim());
    for (std::size_t i = 0; i < data.dim(); ++i) {
      double v = 0;
      const auto [ptr, ec] = std::from_chars(cells[i].data(), cells[i].data() + cells[i].size(), v);
      if (ec != std::errc() || ptr != cells[i].data() + cells[i].size() || !std::isfinite(v)) {
        throw ValidationError(Where(line_no) + ": column '" + data.feature_names[i] +
                              "' is not a number: '" + std::string(cells[i]) + "'");
      }
      row.push_back(v);
    }
    const std::string_view label = cells.back();
    if (label != "0" && label != "1") {
      throw ValidationError(Where(line_no) + ": label must be 0 or 1, got '" +
                            std::string(label) + "'");
    }
    data.features.push_back(std::move(row));
    data.labels.push_back(label == "1" ? 1 : 0);
  }
  if (!header_seen) throw ValidationError("csv: missing header row");
  return data;
}

Dataset LoadCsv(const std::filesystem::path& path) { return ParseCsv(ReadFile(path)); }

std::string WriteCsv(const Dataset& data) {
  ValidateDataset(data);
  std::string out;
  for (const std::string& name : data.feature_names) out += name + ",";
  out += "label\n";
  for (std::size_t r = 0; r < data.rows(); ++r) {
    for (double v : data.features[r]) out += ShortestDecimal(v) + ",";
    out += data.labels[r] ? "1\n" : "0\n";
  }
  return out;
}

Dataset Normalize(const Dataset& data) {
  ValidateDataset(data);
  Dataset out = data;
  if (data.rows() == 0) return out;
  for (std::size_t c = 0; c < data.dim(); ++c) {
    double lo = data.features[0][c];
    double hi = lo;
    for (const auto& row : data.features) {
      lo = std::min(lo, row[c]);
      hi = std::max(hi, row[c]);
    }
    for (auto& row : out.features) {
      row[c] = hi == lo ? 0.0 : (row[c] - lo) / (hi - lo);
    }
  }
  return out;
}

std::pair<Dataset, Dataset> Split(const Dataset& data, double test_fraction,
                                  std::uint64_t seed) {
  if (!(test_fraction > 0.0 && test_fraction < 1.0)) {
    throw ValidationError("test fraction must lie strictly between 0 and 1");
  }
  ValidateDataset(data);
  std::vector<std::size_t> order(data.rows());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::mt19937_64 rng(seed);
  for (std::size_t i = order.size(); i > 1; --i) {
    std::swap(order[i - 1], order[Bounded(rng, i)]);
  }
  const auto test_rows = static_cast<std::size_t>(
      std::llround(static_cast<double>(data.rows()) * test_fraction));
  return {Subset(data, order, test_rows, order.size()), Subset(data, order, 0, test_rows)};
}

}  // namespace mlpsol
