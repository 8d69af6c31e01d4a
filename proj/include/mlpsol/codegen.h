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

// Solidity emission for a model, plus the calldata manifest that uploads its
// quantized parameters and a test set.
//
// Generated ABI:
//   setWeights(uint256 layer, int256[] flat)      row-major, neurons x fan_in
//   setBiases(uint256 layer, int256[] values)
//   uploadTestData(int256[] flatFeatures, uint256[] labels)
//   classify() returns (uint256 correct)
//
// Every int256 is a raw signed 59.18 fixed-point value. classify() performs
// the same operation sequence as FixedForward.

#ifndef MLPSOL_CODEGEN_H_
#define MLPSOL_CODEGEN_H_

#include <string>

#include "mlpsol/dataset.h"
#include "mlpsol/model.h"

namespace mlpsol {

struct CodegenOptions {
  std::string contract_name = "MlpClassifier";
  std::string solidity_pragma = "^0.8.19";
  std::string math_import = "@prb/math/src/SD59x18.sol";
};

// Throws ValidationError for a contract name that is not an identifier or
// pragma/import text that would break out of its position in the source.
void ValidateOptions(const CodegenOptions& options);

// Contract name derived from a model name: non-identifier characters
// dropped, words capitalized, "Mlp" prefix when it would start with a digit.
std::string ContractNameFor(const std::string& model_name);

// Byte-deterministic Solidity source (LF line endings).
std::string EmitContract(const ModelSpec& model, const CodegenOptions& options);

// JSON manifest of the setter calls in replay order:
//   {"schema": "mlpsol.calldata/1", "contract": ..., "model": ...,
//    "calls": [{"function": "setWeights",
//               "signature": "setWeights(uint256,int256[])",
//               "layer": 0, "args": ["0", [...]]}, ...]}
// `layer` is present on parameter setters. `args` holds the ABI arguments in
// order: integers as base-10 strings, arrays as arrays of those. The data
// upload is omitted for an empty test set.
std::string EmitCalldata(const QuantizedModel& model, const Dataset& test,
                         const CodegenOptions& options);

}  // namespace mlpsol

#endif  // MLPSOL_CODEGEN_H_
