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

#include <complex>
#include <numeric>

#include "rcayley/characters.hpp"
#include "rcayley/group.hpp"

namespace rcayley {
namespace {

void expect_group_axioms(const GroupTable& g) {
  const int n = g.order();
  for (int a = 0; a < n; ++a) {
    ASSERT_EQ(g.mul(a, g.identity()), a);
    ASSERT_EQ(g.mul(g.identity(), a), a);
    ASSERT_EQ(g.mul(a, g.inv(a)), g.identity());
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        ASSERT_EQ(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
      }
    }
  }
}

TEST(BuildDihedral, D22Shape) {
  const auto g = build_dihedral(11);
  EXPECT_EQ(g->order(), 22);
  EXPECT_EQ(g->kernel_size(), 11);
  EXPECT_EQ(g->complement_size(), 2);
  EXPECT_EQ(g->ratio(), 5);
  EXPECT_EQ(g->classes().size(), 7u);
  EXPECT_EQ(g->family().label(), "d2p:11");
}

TEST(BuildDihedral, D6Classes) {
  const auto g = build_dihedral(3);
  ASSERT_EQ(g->classes().size(), 3u);
  EXPECT_EQ(g->classes()[0].members, std::vector<int>({0}));
  EXPECT_EQ(g->classes()[1].members, std::vector<int>({1, 2}));
  EXPECT_EQ(g->classes()[2].members, std::vector<int>({3, 4, 5}));
}

TEST(BuildDihedral, Relations) {
  const auto g = build_dihedral(7);
  const int x = g->element(1, 0);
  const int y = g->element(0, 1);
  // y^-1 x y = x^-1
  EXPECT_EQ(g->conjugate(x, y), g->inv(x));
  EXPECT_EQ(g->mul(y, y), g->identity());
}

TEST(BuildDihedral, RejectsBadInput) {
  EXPECT_THROW(build_dihedral(9), ValidationError);
  EXPECT_THROW(build_dihedral(2), ValidationError);
  EXPECT_THROW(build_dihedral(1), ValidationError);
}

TEST(BuildFpq, F21) {
  const auto g = build_fpq(7, 3);
  EXPECT_EQ(g->order(), 21);
  EXPECT_EQ(g->ratio(), 2);
  EXPECT_EQ(g->family().u, 2);
  const int x = g->element(1, 0);
  const int y = g->element(0, 1);
  EXPECT_EQ(g->conjugate(x, y), g->element(2, 0));
}

TEST(BuildFpq, F155ClassCount) {
  const auto g = build_fpq(31, 5);
  EXPECT_EQ(g->ratio(), 6);
  EXPECT_EQ(g->classes().size(), 11u);
}

TEST(BuildFpq, Rejects) {
  EXPECT_THROW(build_fpq(7, 5), ValidationError);
  EXPECT_THROW(build_fpq(7, 2), ValidationError);
  EXPECT_THROW(build_fpq(9, 3), ValidationError);
}

TEST(CanonicalU, SmallestOfOrderQ) {
  EXPECT_EQ(canonical_u(7, 3), 2);
  EXPECT_EQ(canonical_u(13, 3), 3);
  EXPECT_EQ(canonical_u(11, 2), 10);
}

TEST(GroupAxioms, Exhaustive) {
  for (auto g : {build_dihedral(3), build_dihedral(5), build_dihedral(11), build_fpq(7, 3),
                 build_fpq(13, 3), build_dihedral(97)}) {
    SCOPED_TRACE(g->family().label());
    expect_group_axioms(*g);
  }
}

TEST(ConjugacyClasses, PartitionAndSizes) {
  for (auto g : {build_dihedral(11), build_fpq(7, 3), build_fpq(31, 5)}) {
    int total = 0;
    for (const auto& c : g->classes()) {
      total += c.size();
      if (c.representative == g->identity()) continue;
      EXPECT_EQ(c.size(), c.in_kernel ? g->complement_size() : g->kernel_size());
    }
    EXPECT_EQ(total, g->order());
    EXPECT_EQ(g->classes()[0].members, std::vector<int>{0});
    EXPECT_TRUE(g->classes()[0].is_symmetric);
  }
}

TEST(ConjugacyClasses, Symmetry) {
  const auto d = build_dihedral(11);
  for (const auto& c : d->classes()) EXPECT_TRUE(c.is_symmetric);
  const auto f = build_fpq(7, 3);
  const auto& cx = f->classes()[f->class_of(f->element(1, 0))];
  EXPECT_EQ(cx.members, std::vector<int>({1, 2, 4}));
  EXPECT_FALSE(cx.is_symmetric);
}

TEST(ParseGroupSpec, Forms) {
  EXPECT_EQ(parse_group_spec("d2p:11")->order(), 22);
  EXPECT_EQ(parse_group_spec("fpq:7,3")->order(), 21);
  EXPECT_THROW(parse_group_spec("cyc:5"), ValidationError);
  EXPECT_THROW(parse_group_spec("fpq:7"), ValidationError);
  EXPECT_THROW(parse_group_spec("d2p:x"), ValidationError);
}

TEST(ParseGroupSpec, TableGuard) {
  EXPECT_THROW(build_dihedral(2053), GuardError);
}

double row_inner(const GroupTable& g, const Character<double>& a, const Character<double>& b) {
  std::complex<double> s{0, 0};
  for (std::size_t i = 0; i < g.classes().size(); ++i) {
    s += static_cast<double>(g.classes()[i].size()) * a.values[i] * std::conj(b.values[i]);
  }
  return std::abs(s - std::complex<double>(&a == &b ? g.order() : 0, 0));
}

TEST(CharacterTable, DegreesAndOrthogonality) {
  for (auto g : {build_dihedral(11), build_fpq(7, 3), build_fpq(13, 3), build_fpq(31, 5)}) {
    SCOPED_TRACE(g->family().label());
    const auto t = character_table(*g);
    EXPECT_EQ(t.degree_square_sum(), g->order());
    EXPECT_EQ(t.rows.size(), g->classes().size());
    for (const auto& a : t.rows) {
      for (const auto& b : t.rows) EXPECT_LT(row_inner(*g, a, b), 1e-10);
    }
  }
}

TEST(CharacterTable, D22Values) {
  const auto g = build_dihedral(11);
  const auto t = character_table(*g);
  int sign_rows = 0;
  for (const auto& r : t.rows) {
    if (r.kind == CharacterKind::lifted) {
      ++sign_rows;
      for (std::size_t i = 0; i < g->classes().size(); ++i) {
        EXPECT_NEAR(r.values[i].real(), g->classes()[i].in_kernel ? 1.0 : -1.0, 1e-12);
      }
    }
    if (r.kind == CharacterKind::induced) {
      EXPECT_EQ(r.degree, 2);
      for (std::size_t i = 0; i < g->classes().size(); ++i) {
        const auto& c = g->classes()[i];
        const double expect =
            c.in_kernel ? 2 * std::cos(2 * std::numbers::pi * r.label *
                                       g->x_exponent(c.representative) / 11.0)
                        : 0.0;
        EXPECT_NEAR(r.values[i].real(), expect, 1e-12);
      }
    }
  }
  EXPECT_EQ(sign_rows, 1);
}

TEST(CharacterTable, InducedRowsMatchDefinition) {
  for (auto g : {build_fpq(7, 3), build_fpq(13, 3), build_fpq(31, 5)}) {
    const auto t = character_table(*g);
    const int p = g->kernel_size();
    const int q = g->complement_size();
    for (const auto& r : t.rows) {
      if (r.kind != CharacterKind::induced) continue;
      for (int e = 0; e < g->order(); ++e) {
        // phi(e) = sum over z in H of psi(z^-1 e z), psi(x^a) = exp(2 pi i beta a / p)
        std::complex<double> s{0, 0};
        for (int b = 0; b < q; ++b) {
          const int c = g->conjugate(e, g->element(0, b));
          if (g->in_kernel(c)) s += root_of_unity<double>(std::int64_t{r.label} * g->x_exponent(c), p);
        }
        EXPECT_LT(std::abs(s - r.values[g->class_of(e)]), 1e-10);
      }
    }
  }
}

TEST(CosetRepresentatives, SmallestMembers) {
  EXPECT_EQ(coset_representatives(7, 2, 3), std::vector<int>({1, 3}));
  EXPECT_EQ(coset_representatives(11, 10, 2), std::vector<int>({1, 2, 3, 4, 5}));
}

}  // namespace
}  // namespace rcayley
