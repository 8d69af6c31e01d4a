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

#include "mlpsol/model.h"

#include <string>
#include <utility>

#include "json.hpp"
#include "mlpsol/decimal.h"
#include "mlpsol/error.h"
#include "mlpsol/io.h"

namespace mlpsol {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

constexpr std::int64_t kMaxCount = 1'000'000;

[[noreturn]] void Fail(const std::string& field, const std::string& message) {
  throw ValidationError(field + ": " + message);
}

std::string Field(std::size_t layer, const char* member) {
  return "layers[" + std::to_string(layer) + "]." + member;
}

const json& Member(const json& object, const char* key, const std::string& where) {
  const auto it = object.find(key);
  if (it == object.end()) Fail(where.empty() ? key : where + "." + key, "missing");
  return *it;
}

int Count(const json& value, const std::string& field) {
  if (!value.is_number_integer()) Fail(field, "expected a positive integer");
  const std::int64_t v = value.get<std::int64_t>();
  if (v < 1 || v > kMaxCount) {
    Fail(field, "expected a positive integer up to " + std::to_string(kMaxCount) +
                    ", got " + std::to_string(v));
  }
  return static_cast<int>(v);
}

std::string Numeral(const json& value, const std::string& field) {
  if (!value.is_string()) Fail(field, "expected a decimal string");
  try {
    return CanonicalDecimal(value.get<std::string>());
  } catch (const ValidationError& e) {
    Fail(field, e.what());
  }
}

Activation ParseActivation(const json& value, const std::string& field) {
  if (value == "relu") return Activation::kRelu;
  if (value == "sigmoid") return Activation::kSigmoid;
  Fail(field, "unknown activation " + value.dump());
}

void CheckQuantizable(const std::string& numeral, const std::string& field) {
  try {
    QuantizeDecimal(numeral);
  } catch (const Error& e) {
    Fail(field, std::string("parameter out of fixed-point range: ") + e.what());
  }
}

}  // namespace

std::string_view ActivationName(Activation activation) {
  return activation == Activation::kRelu ? "relu" : "sigmoid";
}

ModelSpec ParseModel(std::string_view document) {
  json root;
  try {
    root = json::parse(document);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("syntax error: ") + e.what());
  }
  if (!root.is_object()) Fail("document", "expected a JSON object");

  ModelSpec model;
  const json& name = Member(root, "name", "");
  if (!name.is_string()) Fail("name", "expected a string");
  model.name = name.get<std::string>();
  model.input_dim = Count(Member(root, "input_dim", ""), "input_dim");

  const json& layers = Member(root, "layers", "");
  if (!layers.is_array()) Fail("layers", "expected an array");
  if (layers.empty()) Fail("layers", "at least one layer is required");

  for (std::size_t k = 0; k < layers.size(); ++k) {
    const json& layer = layers[k];
    const std::string where = "layers[" + std::to_string(k) + "]";
    if (!layer.is_object()) Fail(where, "expected an object");
    LayerSpec parsed;
    parsed.neurons = Count(Member(layer, "neurons", where), Field(k, "neurons"));
    parsed.activation =
        ParseActivation(Member(layer, "activation", where), Field(k, "activation"));
    const int fan_in = k == 0 ? model.input_dim : model.layers[k - 1].neurons;

    const json& weights = Member(layer, "weights", where);
    if (!weights.is_array()) Fail(Field(k, "weights"), "expected an array of rows");
    if (weights.size() != static_cast<std::size_t>(parsed.neurons)) {
      Fail(Field(k, "weights"), "dimension mismatch: expected " +
                                    std::to_string(parsed.neurons) + " rows, got " +
                                    std::to_string(weights.size()));
    }
    for (std::size_t j = 0; j < weights.size(); ++j) {
      const std::string row_field = Field(k, "weights") + "[" + std::to_string(j) + "]";
      const json& row = weights[j];
      if (!row.is_array()) Fail(row_field, "expected an array");
      if (row.size() != static_cast<std::size_t>(fan_in)) {
        Fail(row_field, "dimension mismatch: expected " + std::to_string(fan_in) +
                            " entries (fan-in), got " + std::to_string(row.size()));
      }
      std::vector<std::string> values;
      values.reserve(row.size());
      for (std::size_t i = 0; i < row.size(); ++i) {
        values.push_back(Numeral(row[i], row_field + "[" + std::to_string(i) + "]"));
      }
      parsed.weights.push_back(std::move(values));
    }

    const json& biases = Member(layer, "biases", where);
    if (!biases.is_array()) Fail(Field(k, "biases"), "expected an array");
    if (biases.size() != static_cast<std::size_t>(parsed.neurons)) {
      Fail(Field(k, "biases"), "dimension mismatch: expected " +
                                   std::to_string(parsed.neurons) + " entries, got " +
                                   std::to_string(biases.size()));
    }
    for (std::size_t j = 0; j < biases.size(); ++j) {
      parsed.biases.push_back(
          Numeral(biases[j], Field(k, "biases") + "[" + std::to_string(j) + "]"));
    }
    model.layers.push_back(std::move(parsed));
  }
  ValidateModel(model);
  return model;
}

ModelSpec LoadModel(const std::filesystem::path& path) {
  return ParseModel(ReadFile(path));
}

void ValidateModel(const ModelSpec& model) {
  if (model.input_dim < 1) Fail("input_dim", "must be positive");
  if (model.layers.empty()) Fail("layers", "at least one layer is required");
  for (std::size_t k = 0; k < model.layers.size(); ++k) {
    const LayerSpec& layer = model.layers[k];
    const bool last = k + 1 == model.layers.size();
    if (layer.neurons < 1) Fail(Field(k, "neurons"), "must be positive");
    if (last) {
      if (layer.neurons != 1 || layer.activation != Activation::kSigmoid) {
        Fail(Field(k, "activation"),
             "final layer must be a single sigmoid neuron (binary classifier head)");
      }
    } else if (layer.activation != Activation::kRelu) {
      Fail(Field(k, "activation"), "hidden layers must use relu");
    }
    const int fan_in = model.FanIn(k);
    if (layer.weights.size() != static_cast<std::size_t>(layer.neurons)) {
      Fail(Field(k, "weights"), "dimension mismatch: row count != neurons");
    }
    for (std::size_t j = 0; j < layer.weights.size(); ++j) {
      const std::string row_field = Field(k, "weights") + "[" + std::to_string(j) + "]";
      if (layer.weights[j].size() != static_cast<std::size_t>(fan_in)) {
        Fail(row_field, "dimension mismatch: expected " + std::to_string(fan_in) +
                            " entries (fan-in), got " +
                            std::to_string(layer.weights[j].size()));
      }
      for (std::size_t i = 0; i < layer.weights[j].size(); ++i) {
        CheckQuantizable(layer.weights[j][i], row_field + "[" + std::to_string(i) + "]");
      }
    }
    if (layer.biases.size() != static_cast<std::size_t>(layer.neurons)) {
      Fail(Field(k, "biases"), "dimension mismatch: length != neurons");
    }
    for (std::size_t j = 0; j < layer.biases.size(); ++j) {
      CheckQuantizable(layer.biases[j], Field(k, "biases") + "[" + std::to_string(j) + "]");
    }
  }
}

std::string EmitModel(const ModelSpec& model) {
  ordered_json root;
  root["name"] = model.name;
  root["input_dim"] = model.input_dim;
  ordered_json layers = ordered_json::array();
  for (const LayerSpec& layer : model.layers) {
    ordered_json l;
    l["neurons"] = layer.neurons;
    l["activation"] = std::string(ActivationName(layer.activation));
    l["weights"] = layer.weights;
    l["biases"] = layer.biases;
    layers.push_back(std::move(l));
  }
  root["layers"] = std::move(layers);
  return root.dump(1) + "\n";
}

ArchitectureStats ArchStats(const ModelSpec& model) {
  ArchitectureStats stats;
  stats.d = model.input_dim;
  stats.w = static_cast<std::int64_t>(model.layers.size());
  std::int64_t prev = model.input_dim;
  for (const LayerSpec& layer : model.layers) {
    stats.y += prev * layer.neurons;
    stats.z += layer.neurons;
    prev = layer.neurons;
  }
  stats.i = static_cast<std::int64_t>(model.input_dim) * model.layers.front().neurons;
  if (model.layers.size() == 1) {
    stats.x = 1;
  } else {
    const std::int64_t width = model.layers.front().neurons;
    bool uniform = true;
    for (std::size_t k = 0; k + 1 < model.layers.size(); ++k) {
      uniform = uniform && model.layers[k].neurons == width;
    }
    if (uniform) stats.x = width;
  }
  return stats;
}

QuantizedModel Quantize(const ModelSpec& model) {
  QuantizedModel q;
  q.name = model.name;
  q.input_dim = model.input_dim;
  for (std::size_t k = 0; k < model.layers.size(); ++k) {
    const LayerSpec& layer = model.layers[k];
    QuantizedLayer ql;
    ql.neurons = layer.neurons;
    ql.fan_in = model.FanIn(k);
    ql.activation = layer.activation;
    ql.weights.reserve(static_cast<std::size_t>(ql.neurons) * ql.fan_in);
    for (const auto& row : layer.weights) {
      for (const std::string& w : row) ql.weights.push_back(QuantizeDecimal(w));
    }
    for (const std::string& b : layer.biases) ql.biases.push_back(QuantizeDecimal(b));
    q.layers.push_back(std::move(ql));
  }
  return q;
}

ModelSpec Dequantize(const QuantizedModel& model) {
  ModelSpec m;
  m.name = model.name;
  m.input_dim = model.input_dim;
  for (const QuantizedLayer& ql : model.layers) {
    LayerSpec layer;
    layer.neurons = ql.neurons;
    layer.activation = ql.activation;
    for (int j = 0; j < ql.neurons; ++j) {
      std::vector<std::string> row;
      for (int i = 0; i < ql.fan_in; ++i) {
        row.push_back(CanonicalDecimal(ql.weight(j, i).ToDecimal()));
      }
      layer.weights.push_back(std::move(row));
    }
    for (const Fixed& b : ql.biases) layer.biases.push_back(CanonicalDecimal(b.ToDecimal()));
    m.layers.push_back(std::move(layer));
  }
  return m;
}

ModelSpec UniformModel(std::string name, int input_dim, int layers, int width) {
  if (input_dim < 1 || input_dim > kMaxCount) {
    throw ValidationError("input_dim: expected a positive integer");
  }
  if (layers < 1 || layers > kMaxCount) {
    throw ValidationError("layers: expected a positive integer");
  }
  if (width < 1 || width > kMaxCount) {
    throw ValidationError("width: expected a positive integer");
  }
  if (layers == 1 && width != 1) {
    throw ValidationError("width: a single-layer model is one sigmoid neuron; width must be 1");
  }
  ModelSpec model;
  model.name = std::move(name);
  model.input_dim = input_dim;
  int fan_in = input_dim;
  for (int k = 0; k < layers; ++k) {
    const bool last = k + 1 == layers;
    LayerSpec layer;
    layer.neurons = last ? 1 : width;
    layer.activation = last ? Activation::kSigmoid : Activation::kRelu;
    layer.weights.assign(static_cast<std::size_t>(layer.neurons),
                         std::vector<std::string>(static_cast<std::size_t>(fan_in), "0"));
    layer.biases.assign(static_cast<std::size_t>(layer.neurons), "0");
    fan_in = layer.neurons;
    model.layers.push_back(std::move(layer));
  }
  return model;
}

std::string ArchitectureLabel(const ModelSpec& model) {
  const ArchitectureStats stats = ArchStats(model);
  std::string label = std::to_string(stats.w) + "L";
  if (stats.x) return label + std::to_string(*stats.x) + "N";
  label += "(";
  for (std::size_t k = 0; k + 1 < model.layers.size(); ++k) {
    if (k > 0) label += ",";
    label += std::to_string(model.layers[k].neurons);
  }
  return label + ")N";
}

}  // namespace mlpsol
