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

#include "mlpsol/gas.h"

#include <array>
#include <set>
#include <utility>

#include "json.hpp"
#include "mlpsol/error.h"
#include "mlpsol/io.h"

namespace mlpsol {
namespace {

using Member = std::int64_t GasCoefficients::*;

constexpr std::array<std::pair<const char*, Member>, 15> kSymbols = {{
    {"O_D", &GasCoefficients::deploy_overhead},
    {"N_D", &GasCoefficients::deploy_per_neuron},
    {"W_D", &GasCoefficients::deploy_weights_layer},
    {"C_D", &GasCoefficients::deploy_classify_layer},
    {"B_D", &GasCoefficients::deploy_biases_layer},
    {"S_D", &GasCoefficients::deploy_set_weights_layer},
    {"O_W", &GasCoefficients::upload_overhead},
    {"L", &GasCoefficients::upload_per_layer},
    {"W", &GasCoefficients::upload_per_weight},
    {"B", &GasCoefficients::upload_per_bias},
    {"O_C", &GasCoefficients::classify_overhead},
    {"R", &GasCoefficients::classify_relu},
    {"S", &GasCoefficients::classify_sigmoid},
    {"E", &GasCoefficients::classify_per_edge},
    {"L_C", &GasCoefficients::classify_per_layer},
}};

std::int64_t CheckedMul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticError("gas estimate overflow");
  return r;
}

std::int64_t CheckedAdd(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticError("gas estimate overflow");
  return r;
}

void CheckStats(const ArchitectureStats& s) {
  if (s.w < 1 || s.y < 1 || s.z < 1 || s.i < 1 || s.i > s.y) {
    throw ValidationError("invalid architecture statistics");
  }
}

}  // namespace

GasCoefficients ParseCoefficients(std::string_view document) {
  nlohmann::json root;
  try {
    root = nlohmann::json::parse(document);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("coefficients: syntax error: ") + e.what());
  }
  if (!root.is_object()) throw ValidationError("coefficients: expected a JSON object");
  std::set<std::string> known;
  GasCoefficients c;
  for (const auto& [symbol, member] : kSymbols) {
    known.insert(symbol);
    const auto it = root.find(symbol);
    if (it == root.end()) {
      throw ValidationError(std::string("coefficients: missing ") + symbol +
                            " (overrides must give the complete set)");
    }
    if (!it->is_number_integer() || it->get<std::int64_t>() <= 0) {
      throw ValidationError(std::string("coefficients: ") + symbol +
                            " must be a positive integer");
    }
    c.*member = it->get<std::int64_t>();
  }
  for (const auto& [key, value] : root.items()) {
    if (!known.count(key)) throw ValidationError("coefficients: unknown symbol " + key);
  }
  return c;
}

GasCoefficients LoadCoefficients(const std::filesystem::path& path) {
  return ParseCoefficients(ReadFile(path));
}

std::string EmitCoefficients(const GasCoefficients& c) {
  nlohmann::ordered_json root;
  for (const auto& [symbol, member] : kSymbols) root[symbol] = c.*member;
  return root.dump(2) + "\n";
}

std::int64_t DeploymentGas(std::int64_t w, std::int64_t x, const GasCoefficients& c) {
  if (w < 1 || x < 1) throw ValidationError("deployment gas needs w >= 1 and x >= 1");
  return CheckedAdd(CheckedAdd(c.deploy_overhead, CheckedMul(w - 1, c.DeployPerLayer())),
                    CheckedMul(x - 1, c.deploy_per_neuron));
}

std::int64_t DeploymentGas(const ArchitectureStats& stats, const GasCoefficients& c) {
  CheckStats(stats);
  if (!stats.x) {
    throw ValidationError(
        "deployment not estimable: the deployment equation needs a uniform hidden width");
  }
  return DeploymentGas(stats.w, *stats.x, c);
}

std::int64_t UploadGas(const ArchitectureStats& stats, const GasCoefficients& c) {
  CheckStats(stats);
  std::int64_t gas = c.upload_overhead;
  gas = CheckedAdd(gas, CheckedMul(c.upload_per_layer, stats.w));
  gas = CheckedAdd(gas, CheckedMul(c.upload_per_weight, stats.y));
  gas = CheckedAdd(gas, CheckedMul(c.upload_per_bias, stats.z));
  return gas;
}

std::int64_t InferenceGas(const ArchitectureStats& stats, const GasCoefficients& c) {
  CheckStats(stats);
  std::int64_t gas = c.classify_overhead;
  gas = CheckedAdd(gas, CheckedMul(c.classify_relu, stats.t() - stats.i));
  gas = CheckedAdd(gas, CheckedMul(c.classify_per_edge, stats.t()));
  gas = CheckedAdd(gas, CheckedMul(c.classify_per_layer, stats.w - 1));
  gas = CheckedAdd(gas, c.classify_sigmoid);
  return gas;
}

GasEstimate EstimateGas(const ArchitectureStats& stats, const GasCoefficients& c) {
  GasEstimate e;
  if (stats.x) e.deployment = DeploymentGas(stats, c);
  e.upload = UploadGas(stats, c);
  e.inference_per_call = InferenceGas(stats, c);
  return e;
}

}  // namespace mlpsol
