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

// Fixed-width unsigned integers built from 64-bit limbs. These back the
// 256-bit raw value of Fixed and the 512-bit intermediates of mul/div.

#ifndef MLPSOL_WIDE_INT_H_
#define MLPSOL_WIDE_INT_H_

#include <algorithm>
#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>

namespace mlpsol {

template <std::size_t N>
struct WideUint {
  static_assert(N >= 1);
  static constexpr std::size_t kLimbs = N;
  static constexpr std::size_t kBits = 64 * N;

  // Little-endian: limbs[0] is the least significant word.
  std::array<std::uint64_t, N> limbs{};

  constexpr WideUint() = default;
  constexpr explicit WideUint(std::uint64_t v) { limbs[0] = v; }

  static constexpr WideUint Max() {
    WideUint r;
    r.limbs.fill(~std::uint64_t{0});
    return r;
  }

  // 1 << bit.
  static constexpr WideUint Pow2(std::size_t bit) {
    WideUint r;
    r.limbs[bit / 64] = std::uint64_t{1} << (bit % 64);
    return r;
  }

  constexpr bool IsZero() const {
    for (std::uint64_t l : limbs) {
      if (l != 0) return false;
    }
    return true;
  }

  constexpr bool Bit(std::size_t i) const {
    return (limbs[i / 64] >> (i % 64)) & 1u;
  }

  // Index of the highest set bit plus one; 0 for zero.
  constexpr std::size_t BitLength() const {
    for (std::size_t i = N; i-- > 0;) {
      if (limbs[i] != 0) {
        return 64 * i + (64 - static_cast<std::size_t>(std::countl_zero(limbs[i])));
      }
    }
    return 0;
  }

  friend constexpr bool operator==(const WideUint&, const WideUint&) = default;

  friend constexpr std::strong_ordering operator<=>(const WideUint& a,
                                                    const WideUint& b) {
    for (std::size_t i = N; i-- > 0;) {
      if (a.limbs[i] != b.limbs[i]) return a.limbs[i] <=> b.limbs[i];
    }
    return std::strong_ordering::equal;
  }

  // Widening or narrowing copy. Narrowing drops high limbs; callers check
  // BitLength first when that matters.
  template <std::size_t M>
  constexpr WideUint<M> Resize() const {
    WideUint<M> r;
    for (std::size_t i = 0; i < std::min(N, M); ++i) r.limbs[i] = limbs[i];
    return r;
  }
};

// a += b, returning the carry out.
template <std::size_t N>
constexpr bool AddInPlace(WideUint<N>& a, const WideUint<N>& b) {
  unsigned __int128 carry = 0;
  for (std::size_t i = 0; i < N; ++i) {
    carry += static_cast<unsigned __int128>(a.limbs[i]) + b.limbs[i];
    a.limbs[i] = static_cast<std::uint64_t>(carry);
    carry >>= 64;
  }
  return carry != 0;
}

// a -= b, returning the borrow out.
template <std::size_t N>
constexpr bool SubInPlace(WideUint<N>& a, const WideUint<N>& b) {
  std::uint64_t borrow = 0;
  for (std::size_t i = 0; i < N; ++i) {
    const std::uint64_t x = a.limbs[i];
    const std::uint64_t d = x - b.limbs[i] - borrow;
    borrow = (x < b.limbs[i]) || (x - b.limbs[i] < borrow) ? 1 : 0;
    a.limbs[i] = d;
  }
  return borrow != 0;
}

// Wrapping two's-complement negation.
template <std::size_t N>
constexpr WideUint<N> Negate(WideUint<N> a) {
  for (auto& l : a.limbs) l = ~l;
  AddInPlace(a, WideUint<N>(1));
  return a;
}

// Full product; never overflows.
template <std::size_t N, std::size_t M>
constexpr WideUint<N + M> MulFull(const WideUint<N>& a, const WideUint<M>& b) {
  WideUint<N + M> r;
  for (std::size_t i = 0; i < N; ++i) {
    if (a.limbs[i] == 0) continue;
    unsigned __int128 carry = 0;
    for (std::size_t j = 0; j < M; ++j) {
      carry += static_cast<unsigned __int128>(a.limbs[i]) * b.limbs[j] +
               r.limbs[i + j];
      r.limbs[i + j] = static_cast<std::uint64_t>(carry);
      carry >>= 64;
    }
    r.limbs[i + M] = static_cast<std::uint64_t>(carry);
  }
  return r;
}

template <std::size_t N>
constexpr WideUint<N> ShiftLeft(const WideUint<N>& a, std::size_t shift) {
  WideUint<N> r;
  if (shift >= WideUint<N>::kBits) return r;
  const std::size_t words = shift / 64;
  const unsigned bits = shift % 64;
  for (std::size_t i = N; i-- > words;) {
    std::uint64_t v = a.limbs[i - words] << bits;
    if (bits != 0 && i - words >= 1) v |= a.limbs[i - words - 1] >> (64 - bits);
    r.limbs[i] = v;
  }
  return r;
}

template <std::size_t N>
constexpr WideUint<N> ShiftRight(const WideUint<N>& a, std::size_t shift) {
  WideUint<N> r;
  if (shift >= WideUint<N>::kBits) return r;
  const std::size_t words = shift / 64;
  const unsigned bits = shift % 64;
  for (std::size_t i = 0; i + words < N; ++i) {
    std::uint64_t v = a.limbs[i + words] >> bits;
    if (bits != 0 && i + words + 1 < N) v |= a.limbs[i + words + 1] << (64 - bits);
    r.limbs[i] = v;
  }
  return r;
}

// Quotient and remainder by a single word. divisor must be nonzero.
template <std::size_t N>
constexpr std::pair<WideUint<N>, std::uint64_t> DivModWord(
    const WideUint<N>& a, std::uint64_t divisor) {
  WideUint<N> q;
  unsigned __int128 rem = 0;
  for (std::size_t i = N; i-- > 0;) {
    rem = (rem << 64) | a.limbs[i];
    q.limbs[i] = static_cast<std::uint64_t>(rem / divisor);
    rem %= divisor;
  }
  return {q, static_cast<std::uint64_t>(rem)};
}

// Truncating quotient and remainder. Knuth's algorithm D on 32-bit digits.
// divisor must be nonzero.
template <std::size_t N, std::size_t M>
constexpr std::pair<WideUint<N>, WideUint<M>> DivMod(const WideUint<N>& a,
                                                     const WideUint<M>& b) {
  std::size_t nb = M;
  while (nb > 0 && b.limbs[nb - 1] == 0) --nb;
  if (nb == 1) {
    auto [q, r] = DivModWord(a, b.limbs[0]);
    return {q, WideUint<M>(r)};
  }
  constexpr std::size_t kU = 2 * N;
  constexpr std::size_t kV = 2 * M;
  std::array<std::uint32_t, kU + 1> u{};
  std::array<std::uint32_t, kV> v{};
  for (std::size_t i = 0; i < N; ++i) {
    u[2 * i] = static_cast<std::uint32_t>(a.limbs[i]);
    u[2 * i + 1] = static_cast<std::uint32_t>(a.limbs[i] >> 32);
  }
  for (std::size_t i = 0; i < M; ++i) {
    v[2 * i] = static_cast<std::uint32_t>(b.limbs[i]);
    v[2 * i + 1] = static_cast<std::uint32_t>(b.limbs[i] >> 32);
  }
  std::size_t n = kV;
  while (v[n - 1] == 0) --n;
  std::size_t m = kU;
  while (m > 0 && u[m - 1] == 0) --m;
  if (m < n) return {WideUint<N>(), a.template Resize<M>()};

  // Normalize so the top divisor digit has its high bit set.
  const unsigned s = static_cast<unsigned>(std::countl_zero(v[n - 1]));
  std::array<std::uint32_t, kV> vn{};
  std::array<std::uint32_t, kU + 1> un{};
  for (std::size_t i = n - 1; i > 0; --i) {
    vn[i] = (v[i] << s) |
            (s == 0 ? 0 : static_cast<std::uint32_t>(
                              static_cast<std::uint64_t>(v[i - 1]) >> (32 - s)));
  }
  vn[0] = v[0] << s;
  un[m] = s == 0 ? 0
                 : static_cast<std::uint32_t>(
                       static_cast<std::uint64_t>(u[m - 1]) >> (32 - s));
  for (std::size_t i = m - 1; i > 0; --i) {
    un[i] = (u[i] << s) |
            (s == 0 ? 0 : static_cast<std::uint32_t>(
                              static_cast<std::uint64_t>(u[i - 1]) >> (32 - s)));
  }
  un[0] = u[0] << s;

  constexpr std::uint64_t kBase = std::uint64_t{1} << 32;
  std::array<std::uint32_t, kU> q{};
  for (std::size_t j = m - n + 1; j-- > 0;) {
    const std::uint64_t num =
        (static_cast<std::uint64_t>(un[j + n]) << 32) | un[j + n - 1];
    std::uint64_t qhat = num / vn[n - 1];
    std::uint64_t rhat = num % vn[n - 1];
    while (qhat >= kBase ||
           qhat * vn[n - 2] > ((rhat << 32) | un[j + n - 2])) {
      --qhat;
      rhat += vn[n - 1];
      if (rhat >= kBase) break;
    }
    // un[j..j+n] -= qhat * vn
    std::int64_t borrow = 0;
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const std::uint64_t p = qhat * vn[i] + carry;
      carry = p >> 32;
      const std::int64_t t = static_cast<std::int64_t>(un[i + j]) -
                             static_cast<std::int64_t>(p & 0xffffffffu) + borrow;
      un[i + j] = static_cast<std::uint32_t>(t);
      borrow = t >> 32;
    }
    const std::int64_t t = static_cast<std::int64_t>(un[j + n]) -
                           static_cast<std::int64_t>(carry) + borrow;
    un[j + n] = static_cast<std::uint32_t>(t);

    q[j] = static_cast<std::uint32_t>(qhat);
    if (t < 0) {
      // qhat was one too large; add the divisor back.
      --q[j];
      std::uint64_t c = 0;
      for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t sum = static_cast<std::uint64_t>(un[i + j]) + vn[i] + c;
        un[i + j] = static_cast<std::uint32_t>(sum);
        c = sum >> 32;
      }
      un[j + n] = static_cast<std::uint32_t>(un[j + n] + c);
    }
  }

  WideUint<N> quotient;
  for (std::size_t i = 0; i < N; ++i) {
    quotient.limbs[i] =
        (static_cast<std::uint64_t>(q[2 * i + 1]) << 32) | q[2 * i];
  }
  WideUint<M> remainder;
  std::array<std::uint32_t, kV> r{};
  for (std::size_t i = 0; i < n; ++i) {
    r[i] = (un[i] >> s) |
           (s == 0 ? 0 : static_cast<std::uint32_t>(
                             static_cast<std::uint64_t>(un[i + 1]) << (32 - s)));
  }
  for (std::size_t i = 0; i < M; ++i) {
    remainder.limbs[i] =
        (static_cast<std::uint64_t>(r[2 * i + 1]) << 32) | r[2 * i];
  }
  return {quotient, remainder};
}

// Base-10 digits, no sign, no leading zeros ("0" for zero).
template <std::size_t N>
std::string ToDecimalString(WideUint<N> a) {
  constexpr std::uint64_t kChunk = 10000000000000000000ull;  // 10^19
  if (a.IsZero()) return "0";
  std::string out;
  while (!a.IsZero()) {
    auto [q, r] = DivModWord(a, kChunk);
    a = q;
    for (int i = 0; i < 19; ++i) {
      out.push_back(static_cast<char>('0' + r % 10));
      r /= 10;
      if (a.IsZero() && r == 0) break;
    }
  }
  while (out.size() > 1 && out.back() == '0') out.pop_back();
  std::reverse(out.begin(), out.end());
  return out;
}

using Uint256 = WideUint<4>;
using Uint512 = WideUint<8>;

}  // namespace mlpsol

#endif  // MLPSOL_WIDE_INT_H_
