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

#include "mlpsol/codegen.h"

#include <cctype>
#include <string>
#include <vector>

#include "json.hpp"
#include "mlpsol/error.h"
#include "mlpsol/inference.h"

namespace mlpsol {
namespace {

// Accumulates source lines at a given indentation (4 spaces per level).
class SourceWriter {
 public:
  void Line(const std::string& text = "") {
    if (!text.empty()) out_.append(static_cast<std::size_t>(indent_) * 4, ' ');
    out_ += text;
    out_ += '\n';
  }
  void Open(const std::string& text) {
    Line(text + " {");
    ++indent_;
  }
  void Close() {
    --indent_;
    Line("}");
  }
  void Dedent() { --indent_; }
  std::string Take() { return std::move(out_); }

 private:
  std::string out_;
  int indent_ = 0;
};

bool IsIdentifier(const std::string& s) {
  if (s.empty() || std::isdigit(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  }
  return true;
}

std::string Str(std::int64_t v) { return std::to_string(v); }

// Layer comment, e.g. "Layer 1: 4 -> 4, relu".
std::string Describe(const ModelSpec& model, std::size_t k) {
  return "Layer " + Str(static_cast<std::int64_t>(k)) + ": " + Str(model.FanIn(k)) + " -> " +
         Str(model.layers[k].neurons) + ", " +
         std::string(ActivationName(model.layers[k].activation));
}

// Emits the setter dispatching on `layer` to the per-layer storage arrays.
void EmitSetter(SourceWriter& w, const ModelSpec& model, const std::string& function,
                const std::string& param, bool weights) {
  w.Open("function " + function + "(uint256 layer, int256[] calldata " + param + ") external");
  for (std::size_t k = 0; k < model.layers.size(); ++k) {
    const std::string ks = Str(static_cast<std::int64_t>(k));
    const std::int64_t expected =
        weights ? static_cast<std::int64_t>(model.layers[k].neurons) * model.FanIn(k)
                : model.layers[k].neurons;
    const std::string array = (weights ? "weights" : "biases") + ks;
    if (k == 0) {
      w.Open("if (layer == " + ks + ")");
    } else {
      w.Dedent();
      w.Open("} else if (layer == " + ks + ")");
    }
    w.Line("require(" + param + ".length == " + Str(expected) + ", \"" + array +
           ": expected " + Str(expected) + " values\");");
    w.Line(array + " = " + param + ";");
  }
  w.Dedent();
  w.Open("} else");
  w.Line("revert(\"" + function + ": no such layer\");");
  w.Close();
  w.Close();
}

// Model names end up in a comment; keep them printable and on one line.
std::string CommentSafe(const std::string& text) {
  std::string out;
  for (char c : text) {
    const auto u = static_cast<unsigned char>(c);
    out += (u >= 0x20 && u < 0x7f) ? c : '?';
  }
  return out;
}

}  // namespace

void ValidateOptions(const CodegenOptions& options) {
  if (!IsIdentifier(options.contract_name)) {
    throw ValidationError("contract name '" + options.contract_name +
                          "' is not a valid identifier");
  }
  for (char c : options.solidity_pragma) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '.' || c == '^' || c == '~' ||
          c == '<' || c == '>' || c == '=' || c == ' ' || c == '-')) {
      throw ValidationError("invalid solidity pragma '" + options.solidity_pragma + "'");
    }
  }
  if (options.solidity_pragma.empty()) throw ValidationError("empty solidity pragma");
  if (options.math_import.empty() ||
      options.math_import.find_first_of("\"\n\r\\") != std::string::npos) {
    throw ValidationError("invalid math import path '" + options.math_import + "'");
  }
}

std::string ContractNameFor(const std::string& model_name) {
  std::string out;
  bool upper = true;
  for (char c : model_name) {
    if (std::isalnum(static_cast<unsigned char>(c))) {
      out += upper ? static_cast<char>(std::toupper(static_cast<unsigned char>(c))) : c;
      upper = false;
    } else {
      upper = true;
    }
  }
  if (out.empty()) return "MlpClassifier";
  if (std::isdigit(static_cast<unsigned char>(out[0]))) out = "Mlp" + out;
  return out;
}

std::string EmitContract(const ModelSpec& model, const CodegenOptions& options) {
  ValidateOptions(options);
  ValidateModel(model);
  const std::size_t layers = model.layers.size();
  const std::string d = Str(model.input_dim);
  SourceWriter w;

  w.Line("// SPDX-License-Identifier: MIT");
  w.Line("// Generated by mlpsol from model \"" + CommentSafe(model.name) + "\" (" + ArchitectureLabel(model) + ", " + d + " inputs). Do not edit.");
  w.Line("pragma solidity " + options.solidity_pragma + ";");
  w.Line();
  w.Line("import { SD59x18, sd, unwrap } from \"" + options.math_import + "\";");
  w.Line();
  w.Open("contract " + options.contract_name);
  w.Line("uint256 public constant INPUT_DIM = " + d + ";");
  w.Line("uint256 public constant LAYER_COUNT = " + Str(static_cast<std::int64_t>(layers)) + ";");
  w.Line();
  for (std::size_t k = 0; k < layers; ++k) {
    const std::string ks = Str(static_cast<std::int64_t>(k));
    w.Line("// " + Describe(model, k) + ". Row-major: weights" + ks + "[j * " +
           Str(model.FanIn(k)) + " + i].");
    w.Line("int256[] public weights" + ks + ";");
    w.Line("int256[] public biases" + ks + ";");
  }
  w.Line();
  w.Line("int256[] public testFeatures;");
  w.Line("uint256[] public testLabels;");
  w.Line();

  EmitSetter(w, model, "setWeights", "flat", true);
  w.Line();
  EmitSetter(w, model, "setBiases", "values", false);
  w.Line();

  w.Open("function uploadTestData(int256[] calldata flatFeatures, uint256[] calldata labels) external");
  w.Line("require(flatFeatures.length == labels.length * INPUT_DIM, \"uploadTestData: expected " + d +
         " features per label\");");
  w.Line("testFeatures = flatFeatures;");
  w.Line("testLabels = labels;");
  w.Close();
  w.Line();

  w.Open("function relu(SD59x18 x) internal pure returns (SD59x18)");
  w.Line("return x.gt(sd(0)) ? x : sd(0);");
  w.Close();
  w.Line();

  w.Open("function sigmoid(SD59x18 x) internal pure returns (SD59x18)");
  w.Line("SD59x18 one = sd(1e18);");
  w.Open("if (x.lt(sd(0)))");
  w.Line("SD59x18 e = x.exp();");
  w.Line("return e.div(one.add(e));");
  w.Close();
  w.Line("return one.div(one.add(sd(-unwrap(x)).exp()));");
  w.Close();
  w.Line();

  w.Open("function classify() external view returns (uint256 correct)");
  w.Line("uint256 rows = testLabels.length;");
  w.Open("for (uint256 r = 0; r < rows; r++)");
  w.Line("uint256 base = r * INPUT_DIM;");
  w.Line("SD59x18[] memory a = new SD59x18[](" + d + ");");
  w.Open("for (uint256 i = 0; i < " + d + "; i++)");
  w.Line("a[i] = sd(testFeatures[base + i]);");
  w.Close();
  std::string input = "a";
  for (std::size_t k = 0; k < layers; ++k) {
    const LayerSpec& layer = model.layers[k];
    const std::string ks = Str(static_cast<std::int64_t>(k));
    const std::string fan_in = Str(model.FanIn(k));
    const std::string out = "a" + ks;
    const std::string activation =
        layer.activation == Activation::kRelu ? "relu" : "sigmoid";
    w.Line("// " + Describe(model, k));
    w.Line("SD59x18[] memory " + out + " = new SD59x18[](" + Str(layer.neurons) + ");");
    w.Open("for (uint256 j = 0; j < " + Str(layer.neurons) + "; j++)");
    w.Line("SD59x18 acc = sd(0);");
    w.Open("for (uint256 i = 0; i < " + fan_in + "; i++)");
    w.Line("acc = acc.add(sd(weights" + ks + "[j * " + fan_in + " + i]).mul(" + input + "[i]));");
    w.Close();
    w.Line("acc = acc.add(sd(biases" + ks + "[j]));");
    w.Line(out + "[j] = " + activation + "(acc);");
    w.Close();
    input = out;
  }
  w.Line("uint256 predicted = unwrap(" + input + "[0]) >= 5e17 ? 1 : 0;");
  w.Open("if (predicted == testLabels[r])");
  w.Line("correct++;");
  w.Close();
  w.Close();
  w.Close();
  w.Close();
  return w.Take();
}

std::string EmitCalldata(const QuantizedModel& model, const Dataset& test,
                         const CodegenOptions& options) {
  ValidateOptions(options);
  ValidateDataset(test);
  if (test.rows() > 0 && test.dim() != static_cast<std::size_t>(model.input_dim)) {
    throw ValidationError("dimension mismatch: model expects " + Str(model.input_dim) +
                          " features, test set has " + Str(static_cast<std::int64_t>(test.dim())));
  }
  using nlohmann::ordered_json;
  ordered_json calls = ordered_json::array();
  auto raw_array = [](const std::vector<Fixed>& values) {
    ordered_json arr = ordered_json::array();
    for (const Fixed& v : values) arr.push_back(v.RawString());
    return arr;
  };
  for (const char* function : {"setWeights", "setBiases"}) {
    for (std::size_t k = 0; k < model.layers.size(); ++k) {
      const QuantizedLayer& layer = model.layers[k];
      ordered_json call;
      call["function"] = function;
      call["signature"] = std::string(function) + "(uint256,int256[])";
      call["layer"] = k;
      call["args"] = ordered_json::array(
          {Str(static_cast<std::int64_t>(k)),
           raw_array(std::string(function) == "setWeights" ? layer.weights : layer.biases)});
      calls.push_back(std::move(call));
    }
  }
  if (test.rows() > 0) {
    std::vector<Fixed> flat;
    flat.reserve(test.rows() * test.dim());
    ordered_json labels = ordered_json::array();
    for (std::size_t r = 0; r < test.rows(); ++r) {
      for (const Fixed& f : QuantizeRow(test.features[r])) flat.push_back(f);
      labels.push_back(Str(test.labels[r]));
    }
    ordered_json call;
    call["function"] = "uploadTestData";
    call["signature"] = "uploadTestData(int256[],uint256[])";
    call["args"] = ordered_json::array({raw_array(flat), labels});
    calls.push_back(std::move(call));
  }
  ordered_json root;
  root["schema"] = "mlpsol.calldata/1";
  root["contract"] = options.contract_name;
  root["model"] = model.name;
  root["calls"] = std::move(calls);
  return root.dump(1) + "\n";
}

}  // namespace mlpsol
