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

#ifndef RCAYLEY_CHARACTERS_HPP
#define RCAYLEY_CHARACTERS_HPP

#include <cmath>
#include <complex>
#include <concepts>
#include <numbers>
#include <vector>

#include "rcayley/group.hpp"

namespace rcayley {

/// exp(2 pi i num / den), with num reduced modulo den first so the angle
/// never exceeds 2 pi.
template <std::floating_point Real>
std::complex<Real> root_of_unity(std::int64_t num, std::int64_t den) {
  const Real angle = Real{2} * std::numbers::pi_v<Real> *
                     static_cast<Real>(mod_floor(num, den)) /
                     static_cast<Real>(den);
  return {std::cos(angle), std::sin(angle)};
}

enum class CharacterKind { trivial, lifted, induced };

template <std::floating_point Real>
struct Character {
  CharacterKind kind = CharacterKind::trivial;
  int label = 0;  // alpha for lifted rows, coset representative beta for induced
  int degree = 1;
  std::vector<std::complex<Real>> values;  // indexed like GroupTable::classes()
};

template <std::floating_point Real>
struct BasicCharacterTable {
  std::vector<Character<Real>> rows;

  int degree_square_sum() const {
    int s = 0;
    for (const auto& r : rows) s += r.degree * r.degree;
    return s;
  }
};

using CharacterTable = BasicCharacterTable<double>;

/// Smallest member of each coset of <u> in Z_p^x, ascending.
inline std::vector<int> coset_representatives(int p, int u, int q) {
  std::vector<char> taken(p, 0);
  std::vector<int> reps;
  for (int v = 1; v < p; ++v) {
    if (taken[v]) continue;
    reps.push_back(v);
    std::int64_t w = v;
    for (int s = 0; s < q; ++s) {
      taken[w] = 1;
      w = (w * mod_floor(u, p)) % p;
    }
  }
  return reps;
}

/// Explicit character table of Z_p x|_u Z_q (dihedral or F_{p,q}).
///
/// Rows: the trivial character; q-1 characters lifted from H, with
/// chi_alpha(x^a y^b) = exp(2 pi i alpha b / q); and (p-1)/q characters
/// induced from N, phi_beta(x^v) = sum over s in <u> of exp(2 pi i beta v s / p),
/// vanishing off N.
template <std::floating_point Real = double>
BasicCharacterTable<Real> character_table(const GroupTable& g) {
  const auto& fam = g.family();
  if (fam.kind != FamilyKind::dihedral && fam.kind != FamilyKind::frobenius_pq) {
    throw ValidationError("character_table: unsupported group family");
  }
  const int p = fam.p;
  const int q = fam.q;
  const auto& classes = g.classes();
  const std::size_t nc = classes.size();

  std::vector<std::int64_t> subgroup;  // <u> in Z_p^x
  {
    std::int64_t w = 1;
    for (int s = 0; s < q; ++s) {
      subgroup.push_back(w);
      w = (w * mod_floor(fam.u, p)) % p;
    }
  }

  BasicCharacterTable<Real> table;
  Character<Real> trivial;
  trivial.values.assign(nc, {Real{1}, Real{0}});
  table.rows.push_back(std::move(trivial));

  for (int alpha = 1; alpha < q; ++alpha) {
    Character<Real> chi;
    chi.kind = CharacterKind::lifted;
    chi.label = alpha;
    for (const auto& c : classes) {
      const int b = g.y_exponent(c.representative);
      chi.values.push_back(root_of_unity<Real>(std::int64_t{alpha} * b, q));
    }
    table.rows.push_back(std::move(chi));
  }

  for (int beta : coset_representatives(p, fam.u, q)) {
    Character<Real> phi;
    phi.kind = CharacterKind::induced;
    phi.label = beta;
    phi.degree = q;
    for (const auto& c : classes) {
      if (!c.in_kernel) {
        phi.values.emplace_back(Real{0}, Real{0});
        continue;
      }
      const int v = g.x_exponent(c.representative);
      std::complex<Real> sum{0, 0};
      for (std::int64_t s : subgroup) {
        sum += root_of_unity<Real>(std::int64_t{beta} * v % p * s, p);
      }
      phi.values.push_back(sum);
    }
    table.rows.push_back(std::move(phi));
  }
  return table;
}

}  // namespace rcayley

#endif  // RCAYLEY_CHARACTERS_HPP
