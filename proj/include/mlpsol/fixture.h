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

// Seeded synthetic data and models standing in for a real training run.
// Generation uses only mt19937_64 words and integer arithmetic, so outputs
// are identical across platforms and standard libraries.

#ifndef MLPSOL_FIXTURE_H_
#define MLPSOL_FIXTURE_H_

#include <cstdint>

#include "mlpsol/dataset.h"
#include "mlpsol/model.h"

namespace mlpsol {

// Features uniform in [0, 1] at 1e-6 resolution. Labels come from a hidden
// random hyperplane through the centre of the cube plus bounded uniform
// noise, so the set is linearly separable up to the noise.
Dataset SyntheticDataset(std::uint64_t seed, int rows, int features);

// wLxN model (see UniformModel) with every weight and bias uniform in
// [-2.73, 3.12] at 1e-6 resolution.
ModelSpec RandomUniformModel(std::uint64_t seed, int input_dim, int layers, int width);

}  // namespace mlpsol

#endif  // MLPSOL_FIXTURE_H_
