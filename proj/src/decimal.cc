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

#include "mlpsol/decimal.h"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <string>

#include "mlpsol/error.h"

namespace mlpsol {
namespace {

// Larger exponents are rejected rather than expanded into huge strings.
constexpr long kMaxExponent = 1000;

// value = (negative ? -1 : 1) * digits * 10^exponent
struct Numeral {
  bool negative = false;
  std::string digits;
  long exponent = 0;
};

bool IsDigit(char c) { return c >= '0' && c <= '9'; }

Numeral Parse(std::string_view text) {
  const std::string original(text);
  auto fail = [&]() -> Numeral {
    throw ValidationError("malformed decimal '" + original + "'");
  };
  Numeral n;
  std::size_t pos = 0;
  if (pos < text.size() && text[pos] == '-') {
    n.negative = true;
    ++pos;
  }
  std::size_t int_digits = 0;
  while (pos < text.size() && IsDigit(text[pos])) {
    n.digits.push_back(text[pos++]);
    ++int_digits;
  }
  if (int_digits == 0) return fail();
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    std::size_t frac_digits = 0;
    while (pos < text.size() && IsDigit(text[pos])) {
      n.digits.push_back(text[pos++]);
      ++frac_digits;
    }
    if (frac_digits == 0) return fail();
    n.exponent = -static_cast<long>(frac_digits);
  }
  if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
    ++pos;
    bool exp_negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      exp_negative = text[pos] == '-';
      ++pos;
    }
    long exp = 0;
    std::size_t exp_digits = 0;
    while (pos < text.size() && IsDigit(text[pos])) {
      exp = exp * 10 + (text[pos++] - '0');
      ++exp_digits;
      if (exp > kMaxExponent) {
        throw ValidationError("decimal '" + original + "': exponent too large");
      }
    }
    if (exp_digits == 0) return fail();
    n.exponent += exp_negative ? -exp : exp;
  }
  if (pos != text.size()) return fail();

  const std::size_t first = n.digits.find_first_not_of('0');
  if (first == std::string::npos) {
    n.digits = "0";
    n.exponent = 0;
    n.negative = false;
  } else {
    n.digits.erase(0, first);
  }
  return n;
}

std::string Format(const Numeral& n) {
  std::string integer;
  std::string fraction;
  if (n.exponent >= 0) {
    integer = n.digits + std::string(static_cast<std::size_t>(n.exponent), '0');
  } else {
    const std::size_t frac_len = static_cast<std::size_t>(-n.exponent);
    if (n.digits.size() > frac_len) {
      integer = n.digits.substr(0, n.digits.size() - frac_len);
      fraction = n.digits.substr(n.digits.size() - frac_len);
    } else {
      integer = "0";
      fraction = std::string(frac_len - n.digits.size(), '0') + n.digits;
    }
  }
  const std::size_t first = integer.find_first_not_of('0');
  integer = first == std::string::npos ? "0" : integer.substr(first);
  while (!fraction.empty() && fraction.back() == '0') fraction.pop_back();
  if (integer == "0" && fraction.empty()) return "0";
  std::string out = n.negative ? "-" : "";
  out += integer;
  if (!fraction.empty()) out += "." + fraction;
  return out;
}

}  // namespace

std::string CanonicalDecimal(std::string_view text) { return Format(Parse(text)); }

std::string RoundDecimal(std::string_view text, int places) {
  Numeral n = Parse(text);
  if (n.exponent >= -places) return Format(n);
  const std::size_t drop = static_cast<std::size_t>(-places - n.exponent);
  bool round_up = false;
  std::string kept;
  if (drop <= n.digits.size()) {
    kept = n.digits.substr(0, n.digits.size() - drop);
    round_up = drop > 0 && n.digits[n.digits.size() - drop] >= '5';
  }
  if (kept.empty()) kept = "0";
  if (round_up) {
    std::size_t i = kept.size();
    while (i > 0) {
      --i;
      if (kept[i] == '9') {
        kept[i] = '0';
      } else {
        ++kept[i];
        break;
      }
      if (i == 0) kept.insert(kept.begin(), '1');
    }
  }
  n.digits = kept;
  n.exponent = -places;
  return Format(n);
}

Fixed QuantizeDecimal(std::string_view text) {
  return Fixed::FromDecimal(RoundDecimal(text, Fixed::kDecimals));
}

std::string ShortestDecimal(double value) {
  if (!std::isfinite(value)) {
    throw ValidationError("non-finite value cannot be quantized");
  }
  char buf[64];
  const auto result = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, result.ptr);
}

Fixed QuantizeDouble(double value) { return QuantizeDecimal(ShortestDecimal(value)); }

}  // namespace mlpsol
