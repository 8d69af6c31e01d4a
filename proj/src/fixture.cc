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

#include "mlpsol/fixture.h"

#include <random>
#include <string>

#include "mlpsol/decimal.h"
#include "mlpsol/error.h"

namespace mlpsol {
namespace {

constexpr std::int64_t kMicro = 1'000'000;
constexpr std::int64_t kWeightLo = -2'730'000;
constexpr std::int64_t kWeightHi = 3'120'000;

std::int64_t Uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return lo + static_cast<std::int64_t>(v % span);
}

std::string MicrosText(std::int64_t micros) {
  const std::int64_t mag = micros < 0 ? -micros : micros;
  std::string frac = std::to_string(mag % kMicro);
  frac.insert(0, 6 - frac.size(), '0');
  return CanonicalDecimal((micros < 0 ? "-" : "") + std::to_string(mag / kMicro) + "." + frac);
}

}  // namespace

Dataset SyntheticDataset(std::uint64_t seed, int rows, int features) {
  if (rows < 1 || features < 1) {
    throw ValidationError("synthetic dataset needs at least one row and one feature");
  }
  std::mt19937_64 rng(seed);
  std::vector<std::int64_t> direction(static_cast<std::size_t>(features));
  std::int64_t norm1 = 0;
  for (auto& v : direction) {
    v = Uniform(rng, -kMicro, kMicro);
    norm1 += v < 0 ? -v : v;
  }
  // Noise amplitude: a tenth of the largest possible score.
  const std::int64_t noise = norm1 * (kMicro / 2) / 10;

  Dataset data;
  for (int i = 0; i < features; ++i) data.feature_names.push_back("f" + std::to_string(i));
  for (int r = 0; r < rows; ++r) {
    std::vector<double> row;
    __int128 score = 0;
    for (int i = 0; i < features; ++i) {
      const std::int64_t x = Uniform(rng, 0, kMicro);
      // Score against the hyperplane through (0.5, ..., 0.5), in micro^2.
      score += static_cast<__int128>(direction[i]) * (x - kMicro / 2);
      row.push_back(static_cast<double>(x) / static_cast<double>(kMicro));
    }
    score += Uniform(rng, -noise, noise);
    data.features.push_back(std::move(row));
    data.labels.push_back(score > 0 ? 1 : 0);
  }
  return data;
}

ModelSpec RandomUniformModel(std::uint64_t seed, int input_dim, int layers, int width) {
  ModelSpec model = UniformModel(std::to_string(layers) + "L" + std::to_string(width) + "N",
                                 input_dim, layers, width);
  std::mt19937_64 rng(seed);
  for (LayerSpec& layer : model.layers) {
    for (auto& row : layer.weights) {
      for (std::string& w : row) w = MicrosText(Uniform(rng, kWeightLo, kWeightHi));
    }
    for (std::string& b : layer.biases) b = MicrosText(Uniform(rng, kWeightLo, kWeightHi));
  }
  return model;
}

}  // namespace mlpsol
