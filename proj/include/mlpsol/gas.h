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

// Closed-form gas estimates for generated contracts.
//
//   deployment = O_D + (w - 1)(W_D + C_D + B_D + S_D) + (x - 1) N_D
//   upload     = O_W + L w + W y + B z
//   inference  = O_C + R (t - i) + E t + L_C (w - 1) + S
//
// w layers, x uniform hidden width, y = t edges (input edges included),
// z neurons, i input-layer edges. Coefficients were measured empirically
// and depend on chain and compiler version, so they can be overridden from
// a file.

#ifndef MLPSOL_GAS_H_
#define MLPSOL_GAS_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "mlpsol/model.h"

namespace mlpsol {

struct GasCoefficients {
  // Deployment.
  std::int64_t deploy_overhead = 2030000;         // O_D
  std::int64_t deploy_per_neuron = 2273;          // N_D
  std::int64_t deploy_weights_layer = 29320;      // W_D
  std::int64_t deploy_classify_layer = 90000;     // C_D
  std::int64_t deploy_biases_layer = 24987;       // B_D
  std::int64_t deploy_set_weights_layer = 32000;  // S_D
  // Weights and biases upload.
  std::int64_t upload_overhead = 33164;   // O_W
  std::int64_t upload_per_layer = 29963;  // L
  std::int64_t upload_per_weight = 22501; // W
  std::int64_t upload_per_bias = 58800;   // B
  // Classification.
  std::int64_t classify_overhead = 3800106;  // O_C
  std::int64_t classify_relu = 22808;        // R
  std::int64_t classify_sigmoid = 28033;     // S
  std::int64_t classify_per_edge = 106514;   // E
  std::int64_t classify_per_layer = 103247;  // L_C

  // Cost of one additional layer at deployment: W_D + C_D + B_D + S_D.
  std::int64_t DeployPerLayer() const {
    return deploy_weights_layer + deploy_classify_layer + deploy_biases_layer +
           deploy_set_weights_layer;
  }

  friend bool operator==(const GasCoefficients&, const GasCoefficients&) = default;
};

// Parses a flat JSON object mapping all 15 symbols (O_D, N_D, W_D, C_D, B_D,
// S_D, O_W, L, W, B, O_C, R, S, E, L_C) to positive integers. Partial sets
// and unknown keys are rejected.
GasCoefficients ParseCoefficients(std::string_view document);
GasCoefficients LoadCoefficients(const std::filesystem::path& path);
std::string EmitCoefficients(const GasCoefficients& coefficients);

// Throws ValidationError unless w >= 1 and x >= 1.
std::int64_t DeploymentGas(std::int64_t w, std::int64_t x, const GasCoefficients& c);
// Throws ValidationError for models without a uniform hidden width.
std::int64_t DeploymentGas(const ArchitectureStats& stats, const GasCoefficients& c);
std::int64_t UploadGas(const ArchitectureStats& stats, const GasCoefficients& c);
std::int64_t InferenceGas(const ArchitectureStats& stats, const GasCoefficients& c);

struct GasEstimate {
  // Empty when the architecture has no uniform hidden width.
  std::optional<std::int64_t> deployment;
  std::int64_t upload = 0;
  std::int64_t inference_per_call = 0;

  // deployment + upload; empty when deployment is.
  std::optional<std::int64_t> total_setup() const {
    if (!deployment) return std::nullopt;
    return *deployment + upload;
  }
};

GasEstimate EstimateGas(const ArchitectureStats& stats, const GasCoefficients& c);

}  // namespace mlpsol

#endif  // MLPSOL_GAS_H_
