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

// Signed 59.18-decimal fixed-point numbers. A Fixed holds a 256-bit
// two's-complement integer `raw`; the value it represents is raw / 10^18.
// Every operation either produces an exactly specified result or throws
// ArithmeticError; nothing wraps silently.

#ifndef MLPSOL_FIXED_H_
#define MLPSOL_FIXED_H_

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "mlpsol/wide_int.h"

namespace mlpsol {

class Fixed {
 public:
  static constexpr std::uint64_t kScale = 1'000'000'000'000'000'000ull;
  static constexpr int kDecimals = 18;

  constexpr Fixed() = default;

  // Reinterprets a 256-bit two's-complement pattern as a raw value.
  static constexpr Fixed FromBits(const Uint256& bits) {
    Fixed f;
    f.bits_ = bits;
    return f;
  }
  static Fixed FromRaw(std::int64_t raw);
  // Base-10 text of the raw integer, e.g. "-1" for -1e-18.
  static Fixed FromRawString(std::string_view text);
  // Exact parse of `-?digits[.digits]` with at most 18 fractional digits.
  static Fixed FromDecimal(std::string_view text);
  static Fixed FromInt(std::int64_t value);

  static Fixed Zero() { return Fixed(); }
  static Fixed One() { return FromRaw(static_cast<std::int64_t>(kScale)); }
  static Fixed Max();  // raw 2^255 - 1
  static Fixed Min();  // raw -2^255

  const Uint256& bits() const { return bits_; }
  bool IsNegative() const { return bits_.Bit(255); }
  bool IsZero() const { return bits_.IsZero(); }
  // |raw|; 2^255 for Min().
  Uint256 Magnitude() const;

  // Canonical text `-?D+.D{18}`.
  std::string ToDecimal() const;
  // Base-10 raw integer.
  std::string RawString() const;
  // Nearest double (via the decimal text).
  double ToDouble() const;

  friend bool operator==(const Fixed&, const Fixed&) = default;
  friend std::strong_ordering operator<=>(const Fixed& a, const Fixed& b);

 private:
  Uint256 bits_;
};

// raw(a) + raw(b), exact.
Fixed Add(const Fixed& a, const Fixed& b);
Fixed Sub(const Fixed& a, const Fixed& b);
Fixed Negate(const Fixed& a);
// trunc(raw(a) * raw(b) / 10^18) over a 512-bit intermediate.
Fixed Mul(const Fixed& a, const Fixed& b);
// trunc(raw(a) * 10^18 / raw(b)) over a 512-bit intermediate.
Fixed Div(const Fixed& a, const Fixed& b);

// e^x. Returns 0 for x <= kExpUnderflowBound and throws for
// x >= kExpUpperBound.
Fixed Exp(const Fixed& x);
Fixed Relu(const Fixed& x);
// 1 / (1 + e^-x), total on the whole domain and always within [0, 1].
Fixed Sigmoid(const Fixed& x);

// Exclusive upper bound of Exp's domain: 192 * ln 2 rounded up to 18 places.
Fixed ExpUpperBound();
// Largest x for which Exp returns exactly 0 by short circuit; e^x < 1e-18
// below it.
Fixed ExpUnderflowBound();

inline Fixed operator+(const Fixed& a, const Fixed& b) { return Add(a, b); }
inline Fixed operator-(const Fixed& a, const Fixed& b) { return Sub(a, b); }
inline Fixed operator-(const Fixed& a) { return Negate(a); }
inline Fixed operator*(const Fixed& a, const Fixed& b) { return Mul(a, b); }
inline Fixed operator/(const Fixed& a, const Fixed& b) { return Div(a, b); }

inline std::ostream& operator<<(std::ostream& os, const Fixed& f) {
  return os << f.ToDecimal();
}

}  // namespace mlpsol

#endif  // MLPSOL_FIXED_H_
