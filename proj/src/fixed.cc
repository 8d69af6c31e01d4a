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

#include "mlpsol/fixed.h"

#include <cstdlib>
#include <string>

#include "mlpsol/error.h"

namespace mlpsol {
namespace {

#include "exp2_table.inc"

const Uint256 kSignBit = Uint256::Pow2(255);
const Uint256 kMaxMagnitude = [] {
  Uint256 m = Uint256::Pow2(255);
  SubInPlace(m, Uint256(1));
  return m;
}();

bool IsDigit(char c) { return c >= '0' && c <= '9'; }

// Applies a sign to a magnitude, rejecting anything outside
// [-2^255, 2^255 - 1].
template <std::size_t N>
Fixed FromSignMagnitude(bool negative, const WideUint<N>& magnitude,
                        const char* what) {
  if (magnitude.BitLength() > 256) {
    throw ArithmeticError(std::string(what) + ": overflow");
  }
  const Uint256 m = magnitude.template Resize<4>();
  if (negative) {
    if (m > kSignBit) throw ArithmeticError(std::string(what) + ": overflow");
    return Fixed::FromBits(Negate(m));
  }
  if (m > kMaxMagnitude) throw ArithmeticError(std::string(what) + ": overflow");
  return Fixed::FromBits(m);
}

// Parses an unsigned base-10 integer of arbitrary length; false if it does
// not fit in 512 bits.
bool ParseDigits(std::string_view digits, Uint512& out) {
  out = Uint512();
  for (char c : digits) {
    const WideUint<9> times_ten = MulFull(out, WideUint<1>(10));
    if (times_ten.limbs[8] != 0) return false;
    out = times_ten.Resize<8>();
    if (AddInPlace(out, Uint512(static_cast<std::uint64_t>(c - '0')))) {
      return false;
    }
  }
  return true;
}

const Uint512 kScale512(Fixed::kScale);

}  // namespace

Fixed Fixed::FromRaw(std::int64_t raw) {
  Uint256 bits(static_cast<std::uint64_t>(raw));
  if (raw < 0) {
    for (std::size_t i = 1; i < 4; ++i) bits.limbs[i] = ~std::uint64_t{0};
  }
  return FromBits(bits);
}

Fixed Fixed::FromInt(std::int64_t value) {
  const bool negative = value < 0;
  const std::uint64_t mag =
      negative ? ~static_cast<std::uint64_t>(value) + 1 : static_cast<std::uint64_t>(value);
  return FromSignMagnitude(negative, MulFull(WideUint<1>(mag), WideUint<1>(kScale)),
                           "Fixed::FromInt");
}

Fixed Fixed::FromRawString(std::string_view text) {
  bool negative = false;
  if (!text.empty() && text.front() == '-') {
    negative = true;
    text.remove_prefix(1);
  }
  if (text.empty()) throw ValidationError("empty raw integer");
  for (char c : text) {
    if (!IsDigit(c)) {
      throw ValidationError("malformed raw integer '" + std::string(text) + "'");
    }
  }
  Uint512 magnitude;
  if (!ParseDigits(text, magnitude)) {
    throw ArithmeticError("raw integer out of range");
  }
  return FromSignMagnitude(negative, magnitude, "raw integer");
}

Fixed Fixed::FromDecimal(std::string_view text) {
  const std::string original(text);
  bool negative = false;
  if (!text.empty() && text.front() == '-') {
    negative = true;
    text.remove_prefix(1);
  }
  const std::size_t point = text.find('.');
  const std::string_view int_part = text.substr(0, point);
  const std::string_view frac_part =
      point == std::string_view::npos ? std::string_view() : text.substr(point + 1);
  auto all_digits = [](std::string_view s) {
    for (char c : s) {
      if (!IsDigit(c)) return false;
    }
    return !s.empty();
  };
  if (!all_digits(int_part) ||
      (point != std::string_view::npos && !all_digits(frac_part))) {
    throw ValidationError("malformed decimal '" + original + "'");
  }
  if (frac_part.size() > static_cast<std::size_t>(kDecimals)) {
    throw ValidationError("decimal '" + original +
                          "' has more than 18 fractional digits");
  }
  Uint512 integer;
  if (!ParseDigits(int_part, integer) || integer.BitLength() > 300) {
    throw ArithmeticError("decimal '" + original + "' out of range");
  }
  std::string frac(frac_part);
  frac.resize(kDecimals, '0');
  Uint512 fraction;
  ParseDigits(frac, fraction);
  Uint512 magnitude = MulFull(integer.Resize<5>(), WideUint<1>(kScale)).Resize<8>();
  AddInPlace(magnitude, fraction);
  return FromSignMagnitude(negative, magnitude, "decimal");
}

Fixed Fixed::Max() { return FromBits(kMaxMagnitude); }
Fixed Fixed::Min() { return FromBits(kSignBit); }

Uint256 Fixed::Magnitude() const {
  return IsNegative() ? mlpsol::Negate(bits_) : bits_;
}

std::string Fixed::RawString() const {
  std::string digits = ToDecimalString(Magnitude());
  return IsNegative() ? "-" + digits : digits;
}

std::string Fixed::ToDecimal() const {
  const auto [integer, fraction] = DivModWord(Magnitude(), kScale);
  std::string frac = std::to_string(fraction);
  frac.insert(0, kDecimals - frac.size(), '0');
  std::string out = IsNegative() ? "-" : "";
  out += ToDecimalString(integer);
  out += '.';
  out += frac;
  return out;
}

double Fixed::ToDouble() const {
  return std::strtod(ToDecimal().c_str(), nullptr);
}

std::strong_ordering operator<=>(const Fixed& a, const Fixed& b) {
  if (a.IsNegative() != b.IsNegative()) {
    return a.IsNegative() ? std::strong_ordering::less
                          : std::strong_ordering::greater;
  }
  // Same sign: two's-complement patterns order like unsigned integers.
  return a.bits() <=> b.bits();
}

Fixed Add(const Fixed& a, const Fixed& b) {
  Uint256 sum = a.bits();
  AddInPlace(sum, b.bits());
  const bool sa = a.IsNegative();
  const bool sb = b.IsNegative();
  const bool sr = sum.Bit(255);
  if (sa == sb && sr != sa) throw ArithmeticError("Fixed add: overflow");
  return Fixed::FromBits(sum);
}

Fixed Negate(const Fixed& a) {
  if (a == Fixed::Min()) throw ArithmeticError("Fixed negate: overflow");
  return Fixed::FromBits(Negate(a.bits()));
}

Fixed Sub(const Fixed& a, const Fixed& b) {
  Uint256 diff = a.bits();
  SubInPlace(diff, b.bits());
  const bool sa = a.IsNegative();
  const bool sb = b.IsNegative();
  const bool sr = diff.Bit(255);
  if (sa != sb && sr != sa) throw ArithmeticError("Fixed sub: overflow");
  return Fixed::FromBits(diff);
}

Fixed Mul(const Fixed& a, const Fixed& b) {
  const Uint512 product = MulFull(a.Magnitude(), b.Magnitude());
  const Uint512 quotient = DivModWord(product, Fixed::kScale).first;
  return FromSignMagnitude(a.IsNegative() != b.IsNegative(), quotient,
                           "Fixed mul");
}

Fixed Div(const Fixed& a, const Fixed& b) {
  if (b.IsZero()) throw ArithmeticError("Fixed div: division by zero");
  const Uint512 numerator = MulFull(a.Magnitude(), WideUint<4>(Fixed::kScale));
  const Uint512 quotient = DivMod(numerator, b.Magnitude()).first;
  return FromSignMagnitude(a.IsNegative() != b.IsNegative(), quotient,
                           "Fixed div");
}

Fixed ExpUpperBound() { return Fixed::FromDecimal("133.084258667509499441"); }
Fixed ExpUnderflowBound() { return Fixed::FromDecimal("-41.446531673892822322"); }

namespace {

// 2^frac for a Q128 fraction in [0, 1), returned in Q128 (so in [2^128, 2^129)).
Uint512 Exp2Fraction(const Uint256& frac) {
  Uint512 result = Uint512::Pow2(128);
  for (std::size_t k = 1; k <= 128; ++k) {
    if (!frac.Bit(128 - k)) continue;
    Uint256 factor;
    factor.limbs[0] = kExp2Fractions[k - 1][1];
    factor.limbs[1] = kExp2Fractions[k - 1][0];
    factor.limbs[2] = 1;
    result = ShiftRight(MulFull(result.Resize<4>(), factor), 128).Resize<8>();
  }
  return result;
}

}  // namespace

Fixed Exp(const Fixed& x) {
  static const Fixed upper = ExpUpperBound();
  static const Fixed underflow = ExpUnderflowBound();
  if (x >= upper) {
    throw ArithmeticError("Fixed exp: input " + x.ToDecimal() +
                          " at or above upper bound");
  }
  if (x <= underflow) return Fixed::Zero();

  // |x| * log2(e) in Q128, truncated.
  Uint256 log2e;
  for (std::size_t i = 0; i < 4; ++i) log2e.limbs[i] = kLog2EQ192[i];
  const Uint512 scaled = MulFull(x.Magnitude(), log2e);
  const Uint512 exponent_q192 = DivModWord(scaled, Fixed::kScale).first;
  const Uint512 exponent = ShiftRight(exponent_q192, 64);
  const std::size_t whole = static_cast<std::size_t>(exponent.limbs[2]);
  Uint256 frac;
  frac.limbs[0] = exponent.limbs[0];
  frac.limbs[1] = exponent.limbs[1];

  if (!x.IsNegative()) {
    // e^x = 2^whole * 2^frac.
    const Uint512 scaled_mantissa =
        MulFull(Exp2Fraction(frac).Resize<4>(), WideUint<1>(Fixed::kScale))
            .Resize<8>();
    const Uint512 raw = whole >= 128 ? ShiftLeft(scaled_mantissa, whole - 128)
                                     : ShiftRight(scaled_mantissa, 128 - whole);
    return FromSignMagnitude(false, raw, "Fixed exp");
  }

  // e^x = 2^-(whole + frac) = 2^-(whole + 1) * 2^(1 - frac).
  std::size_t shift = 128 + whole;
  Uint512 mantissa = Uint512::Pow2(128);
  if (!frac.IsZero()) {
    Uint256 complement = Uint256::Pow2(128);
    SubInPlace(complement, frac);
    mantissa = Exp2Fraction(complement);
    shift += 1;
  }
  const Uint512 scaled_mantissa =
      MulFull(mantissa.Resize<4>(), WideUint<1>(Fixed::kScale)).Resize<8>();
  return FromSignMagnitude(false, ShiftRight(scaled_mantissa, shift), "Fixed exp");
}

Fixed Relu(const Fixed& x) {
  return x.IsNegative() ? Fixed::Zero() : x;
}

Fixed Sigmoid(const Fixed& x) {
  static const Fixed one = Fixed::One();
  if (x.IsNegative()) {
    // e^x / (1 + e^x); e^x underflows to 0 far below -41.
    const Fixed e = Exp(x);
    return Div(e, Add(one, e));
  }
  return Div(one, Add(one, Exp(Negate(x))));
}

}  // namespace mlpsol
