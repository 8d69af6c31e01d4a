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

#include <gtest/gtest.h>

#include <random>
#include <string>
#include <vector>

#include "json.hpp"
#include "mlpsol/error.h"
#include "test_util.h"

namespace mlpsol {
namespace {

using nlohmann::json;

// Document for a d=30 single perceptron with weights 0.01 * (i + 1).
json PerceptronDocument() {
  json row = json::array();
  for (int i = 0; i < 30; ++i) row.push_back("0.0" + std::to_string(i % 10));
  return {{"name", "heart_1l1n"},
          {"input_dim", 30},
          {"layers",
           {{{"neurons", 1}, {"activation", "sigmoid"}, {"weights", {row}},
             {"biases", {"-0.25"}}}}}};
}

void ExpectValidationError(const json& doc, const std::string& fragment) {
  try {
    ParseModel(doc.dump());
    FAIL() << "expected ValidationError containing '" << fragment << "'";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find(fragment), std::string::npos) << e.what();
  }
}

// Counts edges by walking every (source, target) pair.
ArchitectureStats BruteForceStats(const ModelSpec& m) {
  ArchitectureStats s;
  s.d = m.input_dim;
  s.w = static_cast<std::int64_t>(m.layers.size());
  for (std::size_t k = 0; k < m.layers.size(); ++k) {
    for (int j = 0; j < m.layers[k].neurons; ++j) {
      ++s.z;
      for (int i = 0; i < m.FanIn(k); ++i) {
        ++s.y;
        if (k == 0) ++s.i;
      }
    }
  }
  return s;
}

TEST(ParseModelTest, AcceptsPerceptron) {
  const ModelSpec m = ParseModel(PerceptronDocument().dump());
  EXPECT_EQ(m.name, "heart_1l1n");
  EXPECT_EQ(m.input_dim, 30);
  ASSERT_EQ(m.layers.size(), 1u);
  EXPECT_EQ(m.layers[0].activation, Activation::kSigmoid);
  EXPECT_EQ(m.layers[0].weights[0][3], "0.03");
  EXPECT_EQ(m.layers[0].weights[0][0], "0");
  EXPECT_EQ(ArchStats(m).w, 1);
}

TEST(ParseModelTest, DimensionMismatch) {
  json doc = PerceptronDocument();
  doc["layers"][0]["weights"][0].erase(29);
  ExpectValidationError(doc, "layers[0].weights[0]: dimension mismatch: expected 30");
}

TEST(ParseModelTest, UnknownActivation) {
  json doc = PerceptronDocument();
  doc["layers"][0]["activation"] = "tanh";
  ExpectValidationError(doc, "layers[0].activation: unknown activation \"tanh\"");
}

TEST(ParseModelTest, StructuralErrors) {
  ExpectValidationError(json::object(), "name: missing");
  ExpectValidationError(json{{"name", "x"}, {"input_dim", 3}, {"layers", json::array()}},
                        "layers: at least one layer");
  ExpectValidationError(json{{"name", "x"}, {"input_dim", 0}, {"layers", json::array()}},
                        "input_dim");

  json doc = PerceptronDocument();
  doc["layers"][0]["activation"] = "relu";
  ExpectValidationError(doc, "final layer must be a single sigmoid neuron");

  doc = PerceptronDocument();
  doc["layers"][0]["biases"] = {"0", "1"};
  ExpectValidationError(doc, "layers[0].biases: dimension mismatch");

  doc = PerceptronDocument();
  doc["layers"][0]["weights"][0][4] = 0.5;
  ExpectValidationError(doc, "layers[0].weights[0][4]: expected a decimal string");

  doc = PerceptronDocument();
  doc["layers"][0]["weights"][0][4] = "1e80";
  ExpectValidationError(doc, "layers[0].weights[0][4]: parameter out of fixed-point range");

  doc = PerceptronDocument();
  doc["layers"][0]["biases"][0] = "zero";
  ExpectValidationError(doc, "layers[0].biases[0]: malformed decimal");

  EXPECT_THROW(ParseModel("{\"name\": "), ValidationError);
}

TEST(ParseModelTest, HiddenLayersMustBeRelu) {
  std::mt19937_64 rng(1);
  ModelSpec m = testing::RandomModel(rng, 4, {3});
  m.layers[0].activation = Activation::kSigmoid;
  ExpectValidationError(json::parse(EmitModel(m)), "hidden layers must use relu");
  m.layers[0].activation = Activation::kRelu;
  m.layers[1].neurons = 2;
  m.layers[1].weights.push_back(m.layers[1].weights[0]);
  m.layers[1].biases.push_back("0");
  ExpectValidationError(json::parse(EmitModel(m)), "final layer must be a single sigmoid");
}

TEST(ParseModelTest, CanonicalizesNumerals) {
  json doc = PerceptronDocument();
  doc["layers"][0]["weights"][0][0] = "1.2500e-1";
  doc["layers"][0]["biases"][0] = "-0.0";
  const ModelSpec m = ParseModel(doc.dump());
  EXPECT_EQ(m.layers[0].weights[0][0], "0.125");
  EXPECT_EQ(m.layers[0].biases[0], "0");
}

TEST(ArchStatsTest, NamedArchitectures) {
  const ArchitectureStats s1 = ArchStats(UniformModel("a", 30, 1, 1));
  EXPECT_EQ(s1.w, 1);
  EXPECT_EQ(s1.x, 1);
  EXPECT_EQ(s1.z, 1);
  EXPECT_EQ(s1.y, 30);
  EXPECT_EQ(s1.t(), 30);
  EXPECT_EQ(s1.i, 30);

  const ArchitectureStats s2 = ArchStats(UniformModel("b", 30, 2, 2));
  EXPECT_EQ(s2.w, 2);
  EXPECT_EQ(s2.x, 2);
  EXPECT_EQ(s2.z, 3);
  EXPECT_EQ(s2.y, 62);
  EXPECT_EQ(s2.i, 60);

  const ArchitectureStats s3 = ArchStats(UniformModel("c", 30, 3, 4));
  EXPECT_EQ(s3.w, 3);
  EXPECT_EQ(s3.x, 4);
  EXPECT_EQ(s3.z, 9);
  EXPECT_EQ(s3.y, 140);
  EXPECT_EQ(s3.i, 120);
}

TEST(ArchStatsTest, HeterogeneousWidthHasNoX) {
  std::mt19937_64 rng(2);
  const ModelSpec m = testing::RandomModel(rng, 5, {4, 2});
  const ArchitectureStats s = ArchStats(m);
  EXPECT_FALSE(s.x.has_value());
  EXPECT_EQ(s.y, 5 * 4 + 4 * 2 + 2);
  EXPECT_EQ(ArchitectureLabel(m), "3L(4,2)N");
  EXPECT_EQ(ArchitectureLabel(UniformModel("u", 30, 3, 4)), "3L4N");
}

TEST(ArchStatsTest, MatchesBruteForceAndIsLinear) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const int d = 1 + static_cast<int>(rng() % 40);
    std::vector<int> widths = testing::RandomWidths(rng, 4, 8);
    const ModelSpec model = testing::RandomModel(rng, d, widths);
    const ArchitectureStats s = ArchStats(model);
    ArchitectureStats brute = BruteForceStats(model);
    brute.x = s.x;
    EXPECT_EQ(s, brute);
    EXPECT_LE(s.i, s.y);

    // Append one hidden layer of width n just before the head.
    const int n = 1 + static_cast<int>(rng() % 8);
    const std::int64_t prev = widths.empty() ? d : widths.back();
    widths.push_back(n);
    const ArchitectureStats grown = ArchStats(testing::RandomModel(rng, d, widths));
    EXPECT_EQ(grown.z - s.z, n);
    EXPECT_EQ(grown.y - s.y, prev * n + n * 1 - prev * 1);
  }
}

TEST(EmitModelTest, RoundTripAndDeterminism) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    const ModelSpec m =
        testing::RandomModel(rng, 1 + static_cast<int>(rng() % 12), testing::RandomWidths(rng, 3, 5));
    const std::string text = EmitModel(m);
    EXPECT_EQ(ParseModel(text), m);
    EXPECT_EQ(EmitModel(ParseModel(text)), text);
  }
  const ModelSpec perceptron = ParseModel(PerceptronDocument().dump());
  EXPECT_EQ(EmitModel(perceptron), EmitModel(perceptron));
}

TEST(QuantizeTest, Examples) {
  json doc = PerceptronDocument();
  doc["layers"][0]["weights"][0][0] = "0.5";
  doc["layers"][0]["weights"][0][1] = "0.1234567890123456789";
  const QuantizedModel q = Quantize(ParseModel(doc.dump()));
  ASSERT_EQ(q.layers.size(), 1u);
  EXPECT_EQ(q.layers[0].fan_in, 30);
  EXPECT_EQ(q.layers[0].weight(0, 0).RawString(), "500000000000000000");
  EXPECT_EQ(q.layers[0].weight(0, 1).RawString(), "123456789012345679");
  EXPECT_EQ(q.layers[0].biases[0].RawString(), "-250000000000000000");

  const QuantizedModel zero = Quantize(UniformModel("z", 30, 3, 4));
  for (const QuantizedLayer& layer : zero.layers) {
    for (const Fixed& w : layer.weights) EXPECT_TRUE(w.IsZero());
    for (const Fixed& b : layer.biases) EXPECT_TRUE(b.IsZero());
  }
}

TEST(QuantizeTest, Idempotent) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    ModelSpec m = testing::RandomModel(rng, 6, testing::RandomWidths(rng, 2, 4));
    // Push some parameters past 18 places so rounding actually happens.
    m.layers[0].weights[0][0] = "0.12345678901234567890123";
    m.layers[0].biases[0] = "-1.0000000000000000005";
    const QuantizedModel q = Quantize(m);
    EXPECT_EQ(Quantize(Dequantize(q)), q);
    EXPECT_EQ(q.layers[0].biases[0].RawString(), "-1000000000000000001");
  }
}

TEST(UniformModelTest, RejectsBadShapes) {
  EXPECT_THROW(UniformModel("x", 30, 1, 5), ValidationError);
  EXPECT_THROW(UniformModel("x", 0, 1, 1), ValidationError);
  EXPECT_THROW(UniformModel("x", 30, 0, 1), ValidationError);
  EXPECT_NO_THROW(ValidateModel(UniformModel("x", 30, 3, 4)));
}

}  // namespace
}  // namespace mlpsol
