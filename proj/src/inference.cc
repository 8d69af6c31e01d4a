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

#include "mlpsol/inference.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "mlpsol/decimal.h"
#include "mlpsol/error.h"

namespace mlpsol {
namespace {

void CheckWidth(std::size_t got, int expected) {
  if (got != static_cast<std::size_t>(expected)) {
    throw ValidationError("dimension mismatch: model expects " + std::to_string(expected) +
                          " features, row has " + std::to_string(got));
  }
}

double ParseDouble(const std::string& numeral) {
  return std::strtod(numeral.c_str(), nullptr);
}

const Fixed& Half() {
  static const Fixed half = Fixed::FromDecimal("0.5");
  return half;
}

}  // namespace

FloatModel ToFloatModel(const ModelSpec& model) {
  FloatModel fm;
  fm.input_dim = model.input_dim;
  for (std::size_t k = 0; k < model.layers.size(); ++k) {
    const LayerSpec& layer = model.layers[k];
    FloatModel::Layer fl;
    fl.neurons = layer.neurons;
    fl.fan_in = model.FanIn(k);
    fl.activation = layer.activation;
    for (const auto& row : layer.weights) {
      for (const std::string& w : row) fl.weights.push_back(ParseDouble(w));
    }
    for (const std::string& b : layer.biases) fl.biases.push_back(ParseDouble(b));
    fm.layers.push_back(std::move(fl));
  }
  return fm;
}

double FloatForward(const FloatModel& model, std::span<const double> row) {
  CheckWidth(row.size(), model.input_dim);
  std::vector<double> input(row.begin(), row.end());
  std::vector<double> output;
  for (const FloatModel::Layer& layer : model.layers) {
    output.assign(static_cast<std::size_t>(layer.neurons), 0.0);
    for (int j = 0; j < layer.neurons; ++j) {
      double acc = 0.0;
      const double* w = &layer.weights[static_cast<std::size_t>(j) * layer.fan_in];
      for (int i = 0; i < layer.fan_in; ++i) acc += w[i] * input[i];
      acc += layer.biases[j];
      output[j] = layer.activation == Activation::kRelu ? std::max(acc, 0.0)
                                                        : 1.0 / (1.0 + std::exp(-acc));
    }
    input.swap(output);
  }
  return input[0];
}

double FloatForward(const ModelSpec& model, std::span<const double> row) {
  return FloatForward(ToFloatModel(model), row);
}

Fixed FixedForward(const QuantizedModel& model, std::span<const Fixed> row) {
  CheckWidth(row.size(), model.input_dim);
  std::vector<Fixed> input(row.begin(), row.end());
  std::vector<Fixed> output;
  for (const QuantizedLayer& layer : model.layers) {
    output.assign(static_cast<std::size_t>(layer.neurons), Fixed());
    for (int j = 0; j < layer.neurons; ++j) {
      Fixed acc;
      for (int i = 0; i < layer.fan_in; ++i) {
        acc = Add(acc, Mul(layer.weight(j, i), input[i]));
      }
      acc = Add(acc, layer.biases[j]);
      output[j] = layer.activation == Activation::kRelu ? Relu(acc) : Sigmoid(acc);
    }
    input.swap(output);
  }
  return input[0];
}

std::vector<Fixed> QuantizeRow(std::span<const double> row) {
  std::vector<Fixed> out;
  out.reserve(row.size());
  for (double v : row) out.push_back(QuantizeDouble(v));
  return out;
}

int Predict(double probability) { return probability >= 0.5 ? 1 : 0; }

int Predict(const Fixed& probability) { return probability >= Half() ? 1 : 0; }

EvaluationReport Evaluate(const ModelSpec& model, const Dataset& test) {
  ValidateDataset(test);
  CheckWidth(test.dim(), model.input_dim);
  const FloatModel float_model = ToFloatModel(model);
  const QuantizedModel fixed_model = Quantize(model);

  EvaluationReport report;
  report.rows = test.rows();
  for (std::size_t r = 0; r < test.rows(); ++r) {
    const double p = FloatForward(float_model, test.features[r]);
    const Fixed q = FixedForward(fixed_model, QuantizeRow(test.features[r]));
    const int float_label = Predict(p);
    const int fixed_label = Predict(q);
    report.float_probabilities.push_back(p);
    report.fixed_probabilities.push_back(q);
    report.float_predictions.push_back(float_label);
    report.fixed_predictions.push_back(fixed_label);
    report.float_correct += float_label == test.labels[r];
    report.fixed_correct += fixed_label == test.labels[r];
    report.agreement_count += float_label == fixed_label;
    report.min_margin = std::min(report.min_margin, std::abs(p - 0.5));
  }
  if (report.rows > 0) {
    report.float_accuracy = static_cast<double>(report.float_correct) / report.rows;
    report.fixed_accuracy = static_cast<double>(report.fixed_correct) / report.rows;
  }
  return report;
}

}  // namespace mlpsol
