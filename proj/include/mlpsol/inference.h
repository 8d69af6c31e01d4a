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

// Two forward-pass engines over the same model: an IEEE-754 double
// reference, and a Fixed simulation that performs exactly the arithmetic
// of the generated contract. Both accumulate each neuron as
//
//   acc = 0; for i in inputs: acc += w[j][i] * in[i]; acc += b[j]; act(acc)
//
// so fixed-point truncation is reproduced operation for operation.

#ifndef MLPSOL_INFERENCE_H_
#define MLPSOL_INFERENCE_H_

#include <cstddef>
#include <span>
#include <vector>

#include "mlpsol/dataset.h"
#include "mlpsol/fixed.h"
#include "mlpsol/model.h"

namespace mlpsol {

// Double-precision parameters of a ModelSpec, row-major per layer.
struct FloatModel {
  struct Layer {
    int neurons = 0;
    int fan_in = 0;
    Activation activation = Activation::kRelu;
    std::vector<double> weights;
    std::vector<double> biases;
  };
  int input_dim = 0;
  std::vector<Layer> layers;
};

FloatModel ToFloatModel(const ModelSpec& model);

// Probability of class 1. Throws ValidationError on a row of the wrong length.
double FloatForward(const FloatModel& model, std::span<const double> row);
double FloatForward(const ModelSpec& model, std::span<const double> row);

// Fixed-point probability, raw in [0, 10^18]. Throws ValidationError on a
// row of the wrong length and ArithmeticError on overflow.
Fixed FixedForward(const QuantizedModel& model, std::span<const Fixed> row);

// Features as the contract receives them: each double quantized to the
// nearest Fixed via its shortest decimal form.
std::vector<Fixed> QuantizeRow(std::span<const double> row);

// Class 1 iff p >= 0.5.
int Predict(double probability);
int Predict(const Fixed& probability);

struct EvaluationReport {
  std::size_t rows = 0;
  std::vector<double> float_probabilities;
  std::vector<Fixed> fixed_probabilities;
  std::vector<int> float_predictions;
  std::vector<int> fixed_predictions;
  std::size_t float_correct = 0;
  std::size_t fixed_correct = 0;
  double float_accuracy = 0.0;
  double fixed_accuracy = 0.0;
  std::size_t agreement_count = 0;
  // Smallest |p - 0.5| over the float probabilities; 0.5 for an empty set.
  double min_margin = 0.5;

  // Identical accuracy and every prediction matching.
  bool parity() const {
    return float_correct == fixed_correct && agreement_count == rows;
  }
};

// Runs both engines over every row. Throws ValidationError when the
// dataset width differs from the model's input_dim.
EvaluationReport Evaluate(const ModelSpec& model, const Dataset& test);

}  // namespace mlpsol

#endif  // MLPSOL_INFERENCE_H_
