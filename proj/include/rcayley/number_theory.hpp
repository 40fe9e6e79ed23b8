// Copyright 2026 The rcayley Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Exact integer helpers: floor square roots, modular arithmetic, primality.

#ifndef RCAYLEY_NUMBER_THEORY_HPP
#define RCAYLEY_NUMBER_THEORY_HPP

#include <array>
#include <cmath>
#include <cstdint>

#include "rcayley/error.hpp"

namespace rcayley {

/// floor(sqrt(n)), exact for every 64-bit n.
constexpr std::uint64_t isqrt(std::uint64_t n) noexcept {
  if (n < 2) return n;
  // Newton from above; starts at a power of two >= sqrt(n).
  int bits = 0;
  for (std::uint64_t t = n; t != 0; t >>= 1) ++bits;
  std::uint64_t x = std::uint64_t{1} << ((bits + 1) / 2);
  for (;;) {
    const std::uint64_t y = (x + n / x) / 2;
    if (y >= x) return x;
    x = y;
  }
}

constexpr bool is_perfect_square(std::uint64_t n) noexcept {
  const std::uint64_t s = isqrt(n);
  return s * s == n;
}

/// Floor division for signed operands (rounds toward negative infinity).
constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b) noexcept {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

/// Non-negative residue of a modulo m (m > 0).
constexpr std::int64_t mod_floor(std::int64_t a, std::int64_t m) noexcept {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

constexpr std::uint64_t mulmod(std::uint64_t a, std::uint64_t b,
                               std::uint64_t m) noexcept {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(a) * b) % m);
}

constexpr std::uint64_t powmod(std::uint64_t base, std::uint64_t exp,
                               std::uint64_t m) noexcept {
  if (m == 1) return 0;
  std::uint64_t result = 1;
  base %= m;
  while (exp != 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

/// Deterministic Miller-Rabin. The first twelve prime bases are exact below
/// 3.3e24, which covers the whole 64-bit range.
constexpr bool is_prime(std::uint64_t n) noexcept {
  constexpr std::array<std::uint64_t, 12> kBases{2,  3,  5,  7,  11, 13,
                                                 17, 19, 23, 29, 31, 37};
  if (n < 2) return false;
  for (std::uint64_t b : kBases) {
    if (n % b == 0) return n == b;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : kBases) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

/// Smallest e >= 1 with a^e = 1 (mod m); 0 when gcd(a, m) != 1.
constexpr std::uint64_t multiplicative_order(std::uint64_t a,
                                             std::uint64_t m) noexcept {
  if (m == 1) return 1;
  a %= m;
  if (a == 0) return 0;
  std::uint64_t x = a;
  for (std::uint64_t e = 1; e <= m; ++e) {
    if (x == 1) return e;
    x = mulmod(x, a, m);
  }
  return 0;
}

/// Legendre symbol (n/p) for an odd prime p, by Euler's criterion.
inline int legendre(std::int64_t n, std::uint64_t p) {
  if (p < 3 || (p % 2) == 0 || !is_prime(p)) {
    throw ValidationError("legendre: modulus must be an odd prime");
  }
  const auto residue = static_cast<std::uint64_t>(
      mod_floor(n, static_cast<std::int64_t>(p)));
  if (residue == 0) return 0;
  const std::uint64_t e = powmod(residue, (p - 1) / 2, p);
  if (e == 1) return 1;
  if (e == p - 1) return -1;
  throw InvariantViolation("legendre: Euler criterion gave neither 1 nor -1");
}

}  // namespace rcayley

#endif  // RCAYLEY_NUMBER_THEORY_HPP
