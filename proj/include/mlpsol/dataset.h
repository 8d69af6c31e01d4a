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

// Feature matrix plus binary labels, with the CSV format used on disk:
// a header row, d feature columns, then an integer `label` column.

#ifndef MLPSOL_DATASET_H_
#define MLPSOL_DATASET_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mlpsol {

struct Dataset {
  std::vector<std::string> feature_names;
  std::vector<std::vector<double>> features;  // rows x d
  std::vector<int> labels;                    // 0 or 1

  std::size_t rows() const { return labels.size(); }
  std::size_t dim() const { return feature_names.size(); }

  friend bool operator==(const Dataset&, const Dataset&) = default;
};

// Throws ValidationError if rows are ragged or labels are not 0/1.
void ValidateDataset(const Dataset& data);

Dataset ParseCsv(std::string_view text);
Dataset LoadCsv(const std::filesystem::path& path);
// Values are written in shortest round-trip form, so ParseCsv(WriteCsv(d))
// reproduces d exactly.
std::string WriteCsv(const Dataset& data);

// Per-feature min-max scaling to [0, 1]; constant features become 0.
Dataset Normalize(const Dataset& data);

// Seeded Fisher-Yates shuffle, then the first round(rows * test_fraction)
// shuffled rows form the test set. Returns {train, test}; both keep the
// shuffled order.
std::pair<Dataset, Dataset> Split(const Dataset& data, double test_fraction,
                                  std::uint64_t seed);

}  // namespace mlpsol

#endif  // MLPSOL_DATASET_H_
