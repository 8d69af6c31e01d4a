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

// MLP model description: the JSON interchange format, validation,
// quantization to Fixed, and the architecture statistics the gas model
// consumes.
//
// Interchange document:
//
//   {"name": "<id>", "input_dim": <int>,
//    "layers": [{"neurons": <int>, "activation": "relu" | "sigmoid",
//                "weights": [["<dec>", ...], ...], "biases": ["<dec>", ...]},
//               ...]}
//
// layers[k].weights[j][i] is the edge from input (or previous-layer neuron)
// i into neuron j. Hidden layers use relu; the last layer is a single
// sigmoid neuron.

#ifndef MLPSOL_MODEL_H_
#define MLPSOL_MODEL_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mlpsol/fixed.h"

namespace mlpsol {

enum class Activation { kRelu, kSigmoid };

std::string_view ActivationName(Activation activation);

struct LayerSpec {
  int neurons = 0;
  Activation activation = Activation::kRelu;
  // neurons x fan_in canonical decimal numerals.
  std::vector<std::vector<std::string>> weights;
  std::vector<std::string> biases;

  friend bool operator==(const LayerSpec&, const LayerSpec&) = default;
};

struct ModelSpec {
  std::string name;
  int input_dim = 0;
  std::vector<LayerSpec> layers;

  // Inputs feeding layer k.
  int FanIn(std::size_t k) const {
    return k == 0 ? input_dim : layers[k - 1].neurons;
  }

  friend bool operator==(const ModelSpec&, const ModelSpec&) = default;
};

// Bookkeeping counts for the gas equations.
struct ArchitectureStats {
  std::int64_t w = 0;  // layers, output layer included
  // Shared width of the non-final layers; 1 for a single-layer model;
  // empty when hidden widths differ.
  std::optional<std::int64_t> x;
  std::int64_t y = 0;  // edges, input edges included
  std::int64_t z = 0;  // neurons
  std::int64_t i = 0;  // input-layer edges
  std::int64_t d = 0;  // input dimension

  // The inference equation names the edge count t; it is the same as y.
  std::int64_t t() const { return y; }

  friend bool operator==(const ArchitectureStats&, const ArchitectureStats&) = default;
};

struct QuantizedLayer {
  int neurons = 0;
  int fan_in = 0;
  Activation activation = Activation::kRelu;
  std::vector<Fixed> weights;  // row-major, neurons * fan_in
  std::vector<Fixed> biases;

  const Fixed& weight(int neuron, int input) const {
    return weights[static_cast<std::size_t>(neuron) * fan_in + input];
  }

  friend bool operator==(const QuantizedLayer&, const QuantizedLayer&) = default;
};

struct QuantizedModel {
  std::string name;
  int input_dim = 0;
  std::vector<QuantizedLayer> layers;

  friend bool operator==(const QuantizedModel&, const QuantizedModel&) = default;
};

// Parses and validates an interchange document. Numerals are stored in
// canonical form. Throws ValidationError naming the offending field.
ModelSpec ParseModel(std::string_view document);
ModelSpec LoadModel(const std::filesystem::path& path);

// Checks every structural invariant and that each parameter quantizes
// into range.
void ValidateModel(const ModelSpec& model);

// Canonical document; ParseModel(EmitModel(m)) == m for canonical m.
std::string EmitModel(const ModelSpec& model);

ArchitectureStats ArchStats(const ModelSpec& model);

// Rounds every parameter to the nearest Fixed, ties away from zero.
QuantizedModel Quantize(const ModelSpec& model);
ModelSpec Dequantize(const QuantizedModel& model);

// wLxN layout: (layers - 1) relu layers of `width` neurons plus one sigmoid
// output neuron, every parameter zero. width must be 1 when layers == 1.
ModelSpec UniformModel(std::string name, int input_dim, int layers, int width);

// Architecture label such as "2L2N" for uniform models, "3L(4,2)N" otherwise.
std::string ArchitectureLabel(const ModelSpec& model);

}  // namespace mlpsol

#endif  // MLPSOL_MODEL_H_
