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

#include <random>

#include "rcayley/cayley.hpp"

namespace rcayley {
namespace {

TEST(ElementMask, HexLayoutIsLittleEndian) {
  ElementMask m(22);
  m.set(0);
  m.set(9);
  m.set(21);
  EXPECT_EQ(m.to_hex(), "010220");
  EXPECT_EQ(ElementMask::from_hex("010220", 22), m);
}

TEST(ElementMask, HexRejectsWrongWidthAndStrayBits) {
  EXPECT_THROW(ElementMask::from_hex("0102", 22), ValidationError);
  EXPECT_THROW(ElementMask::from_hex("0102c0", 22), ValidationError);
  EXPECT_THROW(ElementMask::from_hex("01g200", 22), ValidationError);
}

TEST(CayleySubset, CompleteSubset) {
  const auto g = build_dihedral(11);
  const auto s = parse_subset_spec(g, "complete");
  EXPECT_EQ(s.size(), 21);
  EXPECT_EQ(s.covalency(), 1);
  EXPECT_EQ(s.l1(), 1);
  EXPECT_EQ(s.l2(), 0);
}

TEST(CayleySubset, RejectsIdentityAndAsymmetry) {
  const auto g = build_fpq(7, 3);
  ElementMask with_id(21);
  with_id.set(0);
  EXPECT_THROW(CayleySubset(g, with_id), ValidationError);
  ElementMask lopsided(21);
  lopsided.set(g->element(1, 0));
  EXPECT_THROW(CayleySubset(g, lopsided), ValidationError);
}

TEST(CayleySubset, RejectsNonGenerating) {
  const auto g = build_dihedral(11);
  ElementMask only_y(22);
  only_y.set(g->element(0, 1));
  EXPECT_THROW(make_subset(g, only_y), ValidationError);
  ElementMask rotations(22);
  for (int a = 1; a < 11; ++a) rotations.set(a);
  EXPECT_THROW(make_subset(g, rotations), ValidationError);
  only_y.set(g->element(3, 1));
  EXPECT_NO_THROW(make_subset(g, only_y));
}

TEST(Generates, AgreesWithSubgroupClosure) {
  const auto g = build_fpq(7, 3);
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    ElementMask m(21);
    for (int e = 1; e < 21; ++e) {
      if (rng() % 5 == 0) {
        m.set(e);
        m.set(g->inv(e));
      }
    }
    std::vector<char> in(21, 0);
    in[0] = 1;
    bool grew = true;
    while (grew) {
      grew = false;
      for (int a = 0; a < 21; ++a) {
        if (!in[a]) continue;
        for (int s : m.indices()) {
          if (!in[g->mul(a, s)]) in[g->mul(a, s)] = grew = true;
        }
      }
    }
    const bool closure = std::count(in.begin(), in.end(), 1) == 21;
    ASSERT_EQ(generates(*g, m), closure) << m.to_hex();
  }
}

TEST(NormalSubsets, CovalencyFormulaHolds) {
  for (auto g : {build_dihedral(11), build_dihedral(13), build_fpq(7, 3), build_fpq(13, 3),
                 build_fpq(31, 5)}) {
    SCOPED_TRACE(g->family().label());
    int seen = 0;
    for_each_normal_subset(*g, [&](const NormalSubsetSpec& spec) {
      const auto s = make_normal_subset(g, spec, false);
      const auto l = covalency_of(*g, a_value(*g, spec), b_value(*g, spec));
      ASSERT_EQ(s.covalency(), l);
      ASSERT_EQ(s.normal_spec(), spec);
      ++seen;
    });
    EXPECT_GT(seen, 0);
  }
}

TEST(NormalSubsets, CountsForD22AndF21) {
  // 5 rotation pairs choose freely, the reflection class must be present.
  EXPECT_EQ(enumerate_normal_subsets(*build_dihedral(11)).size(), 32u);
  // F_{7,3}: one symmetric kernel unit {x, x^3 classes}; off-kernel unit {y, y^2}.
  EXPECT_EQ(enumerate_normal_subsets(*build_fpq(7, 3)).size(), 2u);
}

TEST(NormalSubsets, RejectsAsymmetricChoice) {
  const auto g = build_fpq(7, 3);
  NormalSubsetSpec spec;
  spec.x_reps = {1};
  spec.y_reps = {g->element(0, 1), g->element(0, 2)};
  EXPECT_THROW(make_normal_subset(g, spec), ValidationError);
}

TEST(IntervalSubset, Split) {
  const auto g = build_dihedral(29);
  const auto s = make_interval_subset(g, 9, 8);
  EXPECT_EQ(s.l1(), 9);
  EXPECT_EQ(s.l2(), 8);
  EXPECT_EQ(s.covalency(), 17);
  for (int h = -4; h <= 4; ++h) EXPECT_FALSE(s.contains(mod_floor(h, 29)));
  EXPECT_TRUE(s.contains(5));
  for (int h = 0; h < 8; ++h) EXPECT_FALSE(s.contains(29 + h));
  EXPECT_TRUE(s.contains(29 + 8));
  EXPECT_THROW(make_interval_subset(g, 8, 8), ValidationError);
}

TEST(AdjacencyMatrix, RegularAndSymmetric) {
  const auto g = build_fpq(13, 3);
  const auto s = parse_subset_spec(g, "normal:X=1,12;Y=y,y^2");
  const auto a = adjacency_matrix(s);
  EXPECT_TRUE(a.is_symmetric());
  EXPECT_DOUBLE_EQ(a.trace(), 0.0);
  for (int u = 0; u < g->order(); ++u) {
    double row = 0;
    for (int v = 0; v < g->order(); ++v) row += a(u, v);
    EXPECT_DOUBLE_EQ(row, s.size());
  }
}

TEST(ParseSubsetSpec, Forms) {
  const auto d = build_dihedral(11);
  const auto y_only = parse_subset_spec(d, "normal:X=;Y=y");
  EXPECT_EQ(y_only.size(), 11);
  EXPECT_EQ(parse_subset_spec(d, "normal:X=1;Y=1").size(), 13);
  EXPECT_EQ(parse_subset_spec(d, "interval:l1=3,l2=2").covalency(), 5);
  EXPECT_THROW(parse_subset_spec(d, "normal:X=0;Y=y"), ValidationError);
  EXPECT_THROW(parse_subset_spec(d, "interval:l1=3"), ValidationError);
  EXPECT_THROW(parse_subset_spec(d, "bogus"), ValidationError);
  const auto f = build_fpq(7, 3);
  EXPECT_EQ(parse_subset_spec(f, "normal:X=1,3;Y=1,2").size(), 20);
}

TEST(ParseSubsetSpec, MaskRoundTrip) {
  const auto g = build_dihedral(13);
  std::mt19937_64 rng(3);
  int checked = 0;
  while (checked < 100) {
    ElementMask m(26);
    for (int a = 1; a <= 6; ++a) {
      if (rng() & 1u) {
        m.set(a);
        m.set(13 - a);
      }
    }
    for (int a = 0; a < 13; ++a) m.set(13 + a, (rng() & 1u) != 0);
    if (!generates(*g, m)) continue;
    const auto s = make_subset(g, m);
    EXPECT_EQ(parse_subset_spec(g, s.to_string()), s);
    ++checked;
  }
}

}  // namespace
}  // namespace rcayley
