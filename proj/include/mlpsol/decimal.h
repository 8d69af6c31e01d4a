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

// Exact handling of decimal numerals as they appear in model and dataset
// files: canonicalization and rounding to a fixed number of places. No
// binary floating point is involved.

#ifndef MLPSOL_DECIMAL_H_
#define MLPSOL_DECIMAL_H_

#include <string>
#include <string_view>

#include "mlpsol/fixed.h"

namespace mlpsol {

// Plain decimal form of `-?digits[.digits][(e|E)[+-]digits]`: no exponent,
// no redundant zeros, "0" for any zero. Throws ValidationError on malformed
// input.
std::string CanonicalDecimal(std::string_view text);

// Rounds to `places` fractional digits, nearest with ties away from zero,
// and returns the canonical plain form.
std::string RoundDecimal(std::string_view text, int places);

// The Fixed nearest to a decimal numeral (ties away from zero).
Fixed QuantizeDecimal(std::string_view text);

// Shortest round-trip decimal text of a double.
std::string ShortestDecimal(double value);

// QuantizeDecimal(ShortestDecimal(value)).
Fixed QuantizeDouble(double value);

}  // namespace mlpsol

#endif  // MLPSOL_DECIMAL_H_
