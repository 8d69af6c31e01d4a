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

// Shared generators for tests.

#ifndef MLPSOL_TESTS_TEST_UTIL_H_
#define MLPSOL_TESTS_TEST_UTIL_H_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "mlpsol/dataset.h"
#include "mlpsol/decimal.h"
#include "mlpsol/model.h"

namespace mlpsol::testing {

// Decimal text of a uniform draw from [lo, hi] at micro resolution.
inline std::string RandomMicros(std::mt19937_64& rng, std::int64_t lo_micros,
                                std::int64_t hi_micros) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi_micros - lo_micros) + 1;
  const std::int64_t v = lo_micros + static_cast<std::int64_t>(rng() % span);
  const std::int64_t mag = v < 0 ? -v : v;
  std::string frac = std::to_string(mag % 1'000'000);
  frac.insert(0, 6 - frac.size(), '0');
  return (v < 0 ? "-" : "") + std::to_string(mag / 1'000'000) + "." + frac;
}

// Model with the given hidden widths plus a sigmoid head; parameters uniform
// in [-2.73, 3.12].
inline ModelSpec RandomModel(std::mt19937_64& rng, int input_dim,
                             const std::vector<int>& hidden_widths) {
  ModelSpec model;
  model.name = "random";
  model.input_dim = input_dim;
  int fan_in = input_dim;
  std::vector<int> widths = hidden_widths;
  widths.push_back(1);
  for (std::size_t k = 0; k < widths.size(); ++k) {
    LayerSpec layer;
    layer.neurons = widths[k];
    layer.activation =
        k + 1 == widths.size() ? Activation::kSigmoid : Activation::kRelu;
    for (int j = 0; j < layer.neurons; ++j) {
      std::vector<std::string> row;
      for (int i = 0; i < fan_in; ++i) {
        row.push_back(CanonicalDecimal(RandomMicros(rng, -2'730'000, 3'120'000)));
      }
      layer.weights.push_back(std::move(row));
      layer.biases.push_back(
          CanonicalDecimal(RandomMicros(rng, -2'730'000, 3'120'000)));
    }
    fan_in = layer.neurons;
    model.layers.push_back(std::move(layer));
  }
  return model;
}

inline std::vector<int> RandomWidths(std::mt19937_64& rng, int max_hidden_layers,
                                     int max_width) {
  std::vector<int> widths(rng() % (max_hidden_layers + 1));
  for (int& w : widths) w = 1 + static_cast<int>(rng() % max_width);
  return widths;
}

// rows x d features uniform in [0, 1] at micro resolution, random labels.
inline Dataset RandomDataset(std::mt19937_64& rng, std::size_t rows, int d) {
  Dataset data;
  for (int i = 0; i < d; ++i) data.feature_names.push_back("f" + std::to_string(i));
  for (std::size_t r = 0; r < rows; ++r) {
    std::vector<double> row;
    for (int i = 0; i < d; ++i) row.push_back(static_cast<double>(rng() % 1'000'001) / 1e6);
    data.features.push_back(std::move(row));
    data.labels.push_back(static_cast<int>(rng() & 1));
  }
  return data;
}

}  // namespace mlpsol::testing

#endif  // MLPSOL_TESTS_TEST_UTIL_H_
