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

// Concrete Frobenius groups Z_p x|_u Z_q as multiplication tables.
//
// Both supported families are metacyclic: an element x^a y^b is stored at
// index a + p*b, with kernel N = <x> of order p and complement H = <y> of
// order q.  The dihedral group D_2p is the case q = 2, u = -1, so indices
// 0..p-1 are rotations and p..2p-1 are the reflections x^a y.

#ifndef RCAYLEY_GROUP_HPP
#define RCAYLEY_GROUP_HPP

#include <algorithm>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "rcayley/error.hpp"
#include "rcayley/number_theory.hpp"

namespace rcayley {

enum class FamilyKind { dihedral, frobenius_pq };

struct GroupFamily {
  FamilyKind kind = FamilyKind::dihedral;
  int p = 0;  // kernel order
  int q = 0;  // complement order (2 for dihedral)
  int u = 0;  // y^-1 x y = x^u

  std::string label() const {
    return kind == FamilyKind::dihedral
               ? "d2p:" + std::to_string(p)
               : "fpq:" + std::to_string(p) + "," + std::to_string(q);
  }
};

struct ConjugacyClass {
  int representative = 0;
  std::vector<int> members;  // sorted
  bool is_symmetric = false;
  bool in_kernel = false;

  int size() const noexcept { return static_cast<int>(members.size()); }
};

class GroupTable {
 public:
  GroupTable(GroupFamily family, std::vector<int> mul, std::vector<int> inv)
      : family_(family),
        order_(family.p * family.q),
        mul_(std::move(mul)),
        inv_(std::move(inv)) {}

  const GroupFamily& family() const noexcept { return family_; }
  int order() const noexcept { return order_; }
  int identity() const noexcept { return 0; }
  int mul(int g, int h) const noexcept { return mul_[g * order_ + h]; }
  int inv(int g) const noexcept { return inv_[g]; }
  /// h^-1 g h
  int conjugate(int g, int h) const noexcept { return mul(mul(inv(h), g), h); }

  int kernel_size() const noexcept { return family_.p; }
  int complement_size() const noexcept { return family_.q; }
  int ratio() const noexcept { return (family_.p - 1) / family_.q; }
  bool is_dihedral() const noexcept {
    return family_.kind == FamilyKind::dihedral;
  }

  int element(int a, int b) const noexcept {
    const int p = family_.p;
    const int q = family_.q;
    return static_cast<int>(mod_floor(a, p) + p * mod_floor(b, q));
  }
  int x_exponent(int g) const noexcept { return g % family_.p; }
  int y_exponent(int g) const noexcept { return g / family_.p; }
  bool in_kernel(int g) const noexcept { return g < family_.p; }

  /// "x^3 y^2" style label, used in diagnostics.
  std::string element_label(int g) const {
    const int a = x_exponent(g);
    const int b = y_exponent(g);
    if (a == 0 && b == 0) return "1";
    std::string s;
    if (a != 0) s += a == 1 ? "x" : "x^" + std::to_string(a);
    if (b != 0) s += b == 1 ? "y" : "y^" + std::to_string(b);
    return s;
  }

  const std::vector<ConjugacyClass>& classes() const { return classes_; }
  /// Index into classes() of the class containing g.
  int class_of(int g) const noexcept { return class_index_[g]; }

 private:
  friend GroupTable finish_group(GroupTable);

  GroupFamily family_;
  int order_;
  std::vector<int> mul_;
  std::vector<int> inv_;
  std::vector<ConjugacyClass> classes_;
  std::vector<int> class_index_;
};

using GroupPtr = std::shared_ptr<const GroupTable>;

/// Brute-force conjugacy partition from the multiplication table. Classes are
/// ordered by their smallest member, which is also the representative.
inline std::vector<ConjugacyClass> conjugacy_classes(const GroupTable& g) {
  const int n = g.order();
  std::vector<int> seen(n, -1);
  std::vector<ConjugacyClass> out;
  for (int e = 0; e < n; ++e) {
    if (seen[e] >= 0) continue;
    ConjugacyClass c;
    c.representative = e;
    for (int h = 0; h < n; ++h) {
      const int k = g.conjugate(e, h);
      if (seen[k] < 0) {
        seen[k] = static_cast<int>(out.size());
        c.members.push_back(k);
      }
    }
    std::sort(c.members.begin(), c.members.end());
    c.is_symmetric = std::all_of(c.members.begin(), c.members.end(), [&](int m) {
      return seen[g.inv(m)] == static_cast<int>(out.size());
    });
    c.in_kernel = g.in_kernel(e);
    out.push_back(std::move(c));
  }
  return out;
}

inline GroupTable finish_group(GroupTable g) {
  g.classes_ = conjugacy_classes(g);
  g.class_index_.assign(g.order(), 0);
  for (std::size_t i = 0; i < g.classes_.size(); ++i) {
    for (int m : g.classes_[i].members) {
      g.class_index_[m] = static_cast<int>(i);
    }
  }
  return g;
}

/// Largest group order for which a full multiplication table is built.
inline constexpr int kMaxTableOrder = 4096;

namespace detail {

inline GroupPtr build_metacyclic(GroupFamily fam) {
  const int p = fam.p;
  const int q = fam.q;
  const int n = p * q;
  if (n > kMaxTableOrder) {
    throw GuardError("group order " + std::to_string(n) + " exceeds table limit " +
                     std::to_string(kMaxTableOrder));
  }
  // y^b x^c = x^(c * u^-b) y^b
  const auto u_inv = static_cast<std::int64_t>(
      powmod(static_cast<std::uint64_t>(mod_floor(fam.u, p)),
             static_cast<std::uint64_t>(p - 2), static_cast<std::uint64_t>(p)));
  std::vector<std::int64_t> u_inv_pow(q);
  u_inv_pow[0] = 1;
  for (int b = 1; b < q; ++b) u_inv_pow[b] = (u_inv_pow[b - 1] * u_inv) % p;

  std::vector<int> mul(static_cast<std::size_t>(n) * n);
  std::vector<int> inv(n, -1);
  for (int g = 0; g < n; ++g) {
    const int a = g % p;
    const int b = g / p;
    for (int h = 0; h < n; ++h) {
      const int c = h % p;
      const int d = h / p;
      const auto na = static_cast<int>((a + c * u_inv_pow[b]) % p);
      const int nb = (b + d) % q;
      const int prod = na + p * nb;
      mul[static_cast<std::size_t>(g) * n + h] = prod;
      if (prod == 0) inv[g] = h;
    }
  }
  return std::make_shared<const GroupTable>(
      finish_group(GroupTable(fam, std::move(mul), std::move(inv))));
}

}  // namespace detail

/// D_2p = <x, y | x^p = y^2 = 1, y^-1 x y = x^-1> for an odd prime p.
inline GroupPtr build_dihedral(int p) {
  if (p < 3 || !is_prime(static_cast<std::uint64_t>(p))) {
    throw ValidationError("build_dihedral: p must be an odd prime >= 3, got " +
                          std::to_string(p));
  }
  return detail::build_metacyclic({FamilyKind::dihedral, p, 2, p - 1});
}

/// Smallest u in 2..p-1 with multiplicative order exactly q modulo p.
inline int canonical_u(int p, int q) {
  for (int u = 2; u < p; ++u) {
    if (multiplicative_order(static_cast<std::uint64_t>(u),
                             static_cast<std::uint64_t>(p)) ==
        static_cast<std::uint64_t>(q)) {
      return u;
    }
  }
  throw ValidationError("no element of order " + std::to_string(q) + " mod " +
                        std::to_string(p));
}

/// F_{p,q} = Z_p x|_u Z_q with the canonical u.
inline GroupPtr build_fpq(int p, int q) {
  if (p < 3 || !is_prime(static_cast<std::uint64_t>(p))) {
    throw ValidationError("build_fpq: p must be an odd prime, got " +
                          std::to_string(p));
  }
  if (q < 3 || (q % 2) == 0 || !is_prime(static_cast<std::uint64_t>(q))) {
    throw ValidationError("build_fpq: q must be an odd prime, got " +
                          std::to_string(q));
  }
  if ((p - 1) % q != 0) {
    throw ValidationError("build_fpq: q = " + std::to_string(q) +
                          " does not divide p - 1 = " + std::to_string(p - 1));
  }
  return detail::build_metacyclic(
      {FamilyKind::frobenius_pq, p, q, canonical_u(p, q)});
}

/// Parses "d2p:<p>" or "fpq:<p>,<q>".
inline GroupPtr parse_group_spec(std::string_view spec) {
  auto parse_int = [&](std::string_view s) {
    if (s.empty() || s.size() > 9 ||
        !std::all_of(s.begin(), s.end(),
                     [](char ch) { return ch >= '0' && ch <= '9'; })) {
      throw ValidationError("bad integer '" + std::string(s) +
                            "' in group spec '" + std::string(spec) + "'");
    }
    return std::stoi(std::string(s));
  };
  if (spec.starts_with("d2p:")) {
    return build_dihedral(parse_int(spec.substr(4)));
  }
  if (spec.starts_with("fpq:")) {
    const auto rest = spec.substr(4);
    const auto comma = rest.find(',');
    if (comma == std::string_view::npos) {
      throw ValidationError("fpq spec needs '<p>,<q>': " + std::string(spec));
    }
    return build_fpq(parse_int(rest.substr(0, comma)),
                     parse_int(rest.substr(comma + 1)));
  }
  throw ValidationError("unknown group spec '" + std::string(spec) +
                        "' (expected d2p:<p> or fpq:<p>,<q>)");
}

}  // namespace rcayley

#endif  // RCAYLEY_GROUP_HPP
