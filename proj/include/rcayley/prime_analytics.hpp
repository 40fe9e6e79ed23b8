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

// Sieving, the six exceptional-prime families, Hardy-Littlewood constants
// and the residue classes that contain no exceptional prime.

#ifndef RCAYLEY_PRIME_ANALYTICS_HPP
#define RCAYLEY_PRIME_ANALYTICS_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "rcayley/classifier.hpp"
#include "rcayley/error.hpp"
#include "rcayley/number_theory.hpp"

namespace rcayley {

inline constexpr std::uint64_t kSieveLimit = 1'000'000'000;

/// All primes <= limit, segmented so memory stays O(sqrt(limit) + segment).
inline std::vector<std::uint64_t> sieve_primes(std::uint64_t limit) {
  if (limit > kSieveLimit) {
    throw GuardError("sieve_primes: limit " + std::to_string(limit) + " exceeds 1e9");
  }
  std::vector<std::uint64_t> out;
  if (limit < 2) return out;
  const std::uint64_t root = isqrt(limit);
  std::vector<bool> small(root + 1, true);
  std::vector<std::uint64_t> base;
  for (std::uint64_t i = 2; i <= root; ++i) {
    if (!small[i]) continue;
    base.push_back(i);
    for (std::uint64_t j = i * i; j <= root; j += i) small[j] = false;
  }
  constexpr std::uint64_t kSegment = 1 << 18;
  std::vector<char> seg(kSegment);
  for (std::uint64_t lo = 2; lo <= limit; lo += kSegment) {
    const std::uint64_t hi = std::min(limit, lo + kSegment - 1);
    std::fill(seg.begin(), seg.end(), 1);
    for (std::uint64_t q : base) {
      if (q * q > hi) break;
      std::uint64_t start = std::max(q * q, (lo + q - 1) / q * q);
      for (std::uint64_t j = start; j <= hi; j += q) seg[j - lo] = 0;
    }
    for (std::uint64_t n = lo; n <= hi; ++n) {
      if (seg[n - lo]) out.push_back(n);
    }
  }
  return out;
}

struct FamilyEntry {
  std::int64_t k = 0;
  std::int64_t value = 0;
  bool prime = false;
};

/// f(k) for k_min <= k <= k_max; J_{r,c} is the prime entries.
inline std::vector<FamilyEntry> enumerate_family(int r, int c, std::int64_t k_max) {
  const auto fam = family_or_throw(r, c);
  if (k_max < fam.k_min) {
    throw ValidationError("enumerate_family: k_max must be >= k_min = " +
                          std::to_string(fam.k_min));
  }
  if (k_max > 100'000'000) throw GuardError("enumerate_family: k_max > 1e8");
  std::vector<FamilyEntry> out;
  out.reserve(static_cast<std::size_t>(k_max - fam.k_min + 1));
  for (std::int64_t k = fam.k_min; k <= k_max; ++k) {
    const auto v = fam.value(k);
    out.push_back({k, v, is_prime(static_cast<std::uint64_t>(v))});
  }
  return out;
}

/// Primes of J_{r,c} that do not exceed `limit`.
inline std::vector<std::int64_t> family_primes_below(const QuadraticFamily& fam,
                                                     std::int64_t limit) {
  std::vector<std::int64_t> out;
  for (std::int64_t k = fam.k_min; fam.value(k) <= limit; ++k) {
    if (is_prime(static_cast<std::uint64_t>(fam.value(k)))) out.push_back(fam.value(k));
  }
  return out;
}

struct HLReference {
  int r;
  int c;
  double value;
};

/// C(f)/2 as printed for the six families.
inline constexpr HLReference kHLReference[] = {
    {1, -3, 0.671043}, {1, -1, 1.03566}, {1, 1, 1.84998},
    {3, -1, 1.14801},  {3, 1, 0.757353}, {3, 3, 1.38332},
};

inline std::optional<double> hl_reference(int r, int c) {
  for (const auto& h : kHLReference) {
    if (h.r == r && h.c == c) return h.value;
  }
  return std::nullopt;
}

struct HLEstimate {
  QuadraticFamily family;
  std::int64_t reduced_c = 0;
  std::uint64_t cutoff = 0;
  double partial = 0;  // prod_{3 <= p <= cutoff} (1 - (c'/p)/(p - 1))
  double target = 0;
};

inline constexpr std::uint64_t kDefaultHLCutoff = 10'000'000;

/// Truncated Euler product for C(f)/2. (D/p) = (c'/p) because D = 4c'.
inline HLEstimate hl_constant(const QuadraticFamily& fam,
                              std::uint64_t cutoff = kDefaultHLCutoff) {
  if (cutoff < 1000) throw ValidationError("hl_constant: cutoff must be >= 1000");
  HLEstimate est;
  est.family = fam;
  est.reduced_c = fam.reduced_c();
  est.cutoff = cutoff;
  est.target = hl_reference(fam.r, fam.c).value_or(NAN);
  long double prod = 1.0L;
  for (std::uint64_t p : sieve_primes(cutoff)) {
    if (p < 3) continue;
    const int chi = legendre(est.reduced_c, p);
    prod *= 1.0L - static_cast<long double>(chi) / static_cast<long double>(p - 1);
  }
  est.partial = static_cast<double>(prod);
  return est;
}

struct PiCount {
  std::int64_t count = 0;
  double prediction = 0;  // (C/2) x / ln x
};

inline constexpr std::int64_t kPiLimit = 10'000'000;

/// #{k_min <= k <= x : f(k) prime}, with the Hardy-Littlewood prediction.
inline PiCount pi_f(const QuadraticFamily& fam, std::int64_t x,
                    std::optional<double> half_constant = std::nullopt) {
  if (x > kPiLimit) throw GuardError("pi_f: x exceeds 1e7");
  PiCount out;
  for (std::int64_t k = fam.k_min; k <= x; ++k) {
    if (is_prime(static_cast<std::uint64_t>(fam.value(k)))) ++out.count;
  }
  const double c = half_constant.value_or(hl_reference(fam.r, fam.c).value_or(NAN));
  if (x >= 2) out.prediction = c * static_cast<double>(x) / std::log(static_cast<double>(x));
  return out;
}

struct ResidueAvoidance {
  std::int64_t modulus = 0;
  std::vector<std::int64_t> hit;      // J(a), ascending
  std::vector<std::int64_t> avoided;  // b coprime to a with b not in J(a)
  std::optional<std::int64_t> witness;

  bool avoids(std::int64_t b) const {
    return std::find(avoided.begin(), avoided.end(), b) != avoided.end();
  }
};

/// Residues mod a taken by any of the six polynomials; each is periodic in
/// k with period a, so k = 0..a-1 covers everything.
inline ResidueAvoidance residue_avoidance(std::int64_t a) {
  if (a < 2) throw ValidationError("residue_avoidance: a must be >= 2");
  if (a > 10'000'000) throw GuardError("residue_avoidance: a exceeds 1e7");
  std::vector<char> seen(static_cast<std::size_t>(a), 0);
  for (const auto& fam : quadratic_families()) {
    for (std::int64_t k = 0; k < a; ++k) {
      const auto v = mod_floor(2 * (k * k % a) + (fam.r + 3) * k + fam.c, a);
      seen[static_cast<std::size_t>(v)] = 1;
    }
  }
  ResidueAvoidance out;
  out.modulus = a;
  for (std::int64_t b = 0; b < a; ++b) {
    if (seen[static_cast<std::size_t>(b)]) {
      out.hit.push_back(b);
    } else if (std::gcd(a, b) == 1) {
      out.avoided.push_back(b);
    }
  }
  if (!out.avoided.empty()) out.witness = out.avoided.front();
  return out;
}

}  // namespace rcayley

#endif  // RCAYLEY_PRIME_ANALYTICS_HPP
