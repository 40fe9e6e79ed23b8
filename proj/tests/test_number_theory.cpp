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


#include <gtest/gtest.h>

#include <cstdint>
#include <random>

#include "rcayley/number_theory.hpp"

namespace rcayley {
namespace {

TEST(Isqrt, SmallValues) {
  EXPECT_EQ(isqrt(0), 0u);
  EXPECT_EQ(isqrt(1), 1u);
  EXPECT_EQ(isqrt(3), 1u);
  EXPECT_EQ(isqrt(4), 2u);
  EXPECT_EQ(isqrt(808), 28u);
  EXPECT_EQ(isqrt(232), 15u);
}

TEST(Isqrt, FloorPropertyNearSquares) {
  for (std::uint64_t r : {1ull, 7ull, 1000ull, 65535ull, 4294967295ull}) {
    EXPECT_EQ(isqrt(r * r), r);
    EXPECT_EQ(isqrt(r * r - 1), r - 1);
    EXPECT_EQ(isqrt(r * r + 2 * r), r);
  }
  EXPECT_EQ(isqrt(UINT64_MAX), 4294967295u);
}

TEST(Isqrt, PerfectSquares) {
  EXPECT_TRUE(is_perfect_square(144));
  EXPECT_FALSE(is_perfect_square(145));
}

TEST(FloorArithmetic, NegativeOperands) {
  EXPECT_EQ(floor_div(-7, 2), -4);
  EXPECT_EQ(floor_div(7, 2), 3);
  EXPECT_EQ(mod_floor(-3, 29), 26);
  EXPECT_EQ(mod_floor(58, 29), 0);
}

TEST(Primality, KnownValues) {
  EXPECT_FALSE(is_prime(0));
  EXPECT_FALSE(is_prime(1));
  EXPECT_TRUE(is_prime(2));
  EXPECT_FALSE(is_prime(93));
  EXPECT_TRUE(is_prime(7933));
  EXPECT_TRUE(is_prime(1000000007));
  // Strong pseudoprime to bases 2..37 except the last few.
  EXPECT_FALSE(is_prime(3825123056546413051ull));
  EXPECT_TRUE(is_prime(18446744073709551557ull));
}

TEST(Primality, AgreesWithTrialDivision) {
  auto slow = [](std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
      if (n % d == 0) return false;
    }
    return true;
  };
  for (std::uint64_t n = 0; n < 20000; ++n) ASSERT_EQ(is_prime(n), slow(n)) << n;
}

TEST(MultiplicativeOrder, Examples) {
  EXPECT_EQ(multiplicative_order(2, 7), 3u);
  EXPECT_EQ(multiplicative_order(6, 7), 2u);
  EXPECT_EQ(multiplicative_order(3, 7), 6u);
}

TEST(Legendre, Examples) {
  EXPECT_EQ(legendre(2, 7), 1);
  EXPECT_EQ(legendre(3, 5), -1);
  EXPECT_EQ(legendre(21, 7), 0);
  EXPECT_EQ(legendre(-1, 13), 1);
  EXPECT_EQ(legendre(-1, 11), -1);
}

TEST(Legendre, RejectsNonPrimeModulus) {
  EXPECT_THROW(legendre(2, 9), ValidationError);
  EXPECT_THROW(legendre(2, 2), ValidationError);
}

TEST(Legendre, Multiplicative) {
  std::mt19937_64 rng(7);
  const std::uint64_t primes[] = {3, 5, 7, 11, 101, 7919, 104729};
  std::uniform_int_distribution<std::int64_t> num(-100000, 100000);
  for (int i = 0; i < 1000; ++i) {
    const auto p = primes[i % 7];
    const auto m = num(rng);
    const auto n = num(rng);
    const auto pm = static_cast<std::int64_t>(p);
    const auto mn = mod_floor(m, pm) * mod_floor(n, pm);
    ASSERT_EQ(legendre(mn, p), legendre(m, p) * legendre(n, p));
  }
}

}  // namespace
}  // namespace rcayley
