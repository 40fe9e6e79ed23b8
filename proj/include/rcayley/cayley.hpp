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

// Cayley subsets: symmetric generating subsets S of G without the identity.
// The covalency of S is l(S) = |G| - |S|.

#ifndef RCAYLEY_CAYLEY_HPP
#define RCAYLEY_CAYLEY_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rcayley/dense_matrix.hpp"
#include "rcayley/error.hpp"
#include "rcayley/group.hpp"

namespace rcayley {

/// Fixed-size bitset over element indices.
class ElementMask {
 public:
  ElementMask() = default;
  explicit ElementMask(int n) : n_(n), words_((n + 63) / 64, 0) {}

  int universe() const noexcept { return n_; }
  bool test(int i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(int i, bool v = true) noexcept {
    const std::uint64_t bit = std::uint64_t{1} << (i & 63);
    if (v) {
      words_[i >> 6] |= bit;
    } else {
      words_[i >> 6] &= ~bit;
    }
  }
  int count() const noexcept {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  std::vector<int> indices() const {
    std::vector<int> out;
    for (int i = 0; i < n_; ++i) {
      if (test(i)) out.push_back(i);
    }
    return out;
  }

  /// Little-endian hex: byte k carries bits 8k..8k+7, two hex digits per
  /// byte, bytes in ascending order. Always 2*ceil(n/8) digits.
  std::string to_hex() const {
    static constexpr char kDigits[] = "0123456789abcdef";
    std::string s;
    const int bytes = (n_ + 7) / 8;
    for (int k = 0; k < bytes; ++k) {
      const auto byte = static_cast<unsigned>(
          (words_[k / 8] >> (8 * (k % 8))) & 0xffu);
      s.push_back(kDigits[byte >> 4]);
      s.push_back(kDigits[byte & 0xf]);
    }
    return s;
  }

  static ElementMask from_hex(std::string_view hex, int n) {
    const int bytes = (n + 7) / 8;
    if (static_cast<int>(hex.size()) != 2 * bytes) {
      throw ValidationError("mask hex for a group of order " +
                            std::to_string(n) + " must have " +
                            std::to_string(2 * bytes) + " digits, got " +
                            std::to_string(hex.size()));
    }
    auto nibble = [&](char c) -> unsigned {
      if (c >= '0' && c <= '9') return static_cast<unsigned>(c - '0');
      if (c >= 'a' && c <= 'f') return static_cast<unsigned>(c - 'a' + 10);
      if (c >= 'A' && c <= 'F') return static_cast<unsigned>(c - 'A' + 10);
      throw ValidationError("bad hex digit '" + std::string(1, c) + "'");
    };
    ElementMask m(n);
    for (int k = 0; k < bytes; ++k) {
      const unsigned byte = (nibble(hex[2 * k]) << 4) | nibble(hex[2 * k + 1]);
      for (int b = 0; b < 8; ++b) {
        if (((byte >> b) & 1u) == 0) continue;
        const int i = 8 * k + b;
        if (i >= n) throw ValidationError("mask has bits beyond the group order");
        m.set(i);
      }
    }
    return m;
  }

  friend bool operator==(const ElementMask&, const ElementMask&) = default;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Union-find connectivity of the Cayley graph, i.e. whether S generates G.
inline bool generates(const GroupTable& g, const ElementMask& s) {
  const int n = g.order();
  if (2 * s.count() > n) return true;  // |S| > |G|/2 always generates
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  int components = n;
  const auto elems = s.indices();
  for (int v = 0; v < n; ++v) {
    for (int e : elems) {
      const int a = find(v);
      const int b = find(g.mul(v, e));
      if (a != b) {
        parent[a] = b;
        --components;
      }
    }
  }
  return components == 1;
}

/// Choice of conjugacy-class representatives defining S_{X,Y}: X lists
/// classes inside the kernel N, Y classes outside it. Entries are element
/// indices of class representatives.
struct NormalSubsetSpec {
  std::vector<int> x_reps;
  std::vector<int> y_reps;

  friend bool operator==(const NormalSubsetSpec&,
                         const NormalSubsetSpec&) = default;
};

/// a_X = r - sum over X of |Conj_N(x)|.
inline int a_value(const GroupTable& g, const NormalSubsetSpec& spec) {
  int s = 0;
  for (int x : spec.x_reps) {
    s += g.classes()[g.class_of(x)].size() / g.complement_size();
  }
  return g.ratio() - s;
}

/// b_Y = |H| - 1 - sum over Y of |Conj_H(y)|.
inline int b_value(const GroupTable& g, const NormalSubsetSpec& spec) {
  int s = 0;
  for (int y : spec.y_reps) {
    s += g.classes()[g.class_of(y)].size() / g.kernel_size();
  }
  return g.complement_size() - 1 - s;
}

/// l(a, b) = 1 + a|H| + b|N|.
inline std::int64_t covalency_of(const GroupTable& g, std::int64_t a,
                                 std::int64_t b) {
  return 1 + a * g.complement_size() + b * g.kernel_size();
}

class CayleySubset {
 public:
  /// Validates identity exclusion and symmetry. Generation is checked by
  /// the make_* factories.
  CayleySubset(GroupPtr group, ElementMask mask)
      : group_(std::move(group)), mask_(std::move(mask)) {
    const auto& g = *group_;
    if (mask_.universe() != g.order()) {
      throw ValidationError("subset mask size does not match group order");
    }
    if (mask_.test(g.identity())) {
      throw ValidationError("Cayley subset must not contain the identity");
    }
    for (int e : mask_.indices()) {
      if (!mask_.test(g.inv(e))) {
        throw ValidationError("subset is not symmetric: contains " +
                              g.element_label(e) + " but not its inverse");
      }
    }
    size_ = mask_.count();
  }

  const GroupTable& group() const noexcept { return *group_; }
  const GroupPtr& group_ptr() const noexcept { return group_; }
  const ElementMask& mask() const noexcept { return mask_; }
  bool contains(int e) const noexcept { return mask_.test(e); }
  int size() const noexcept { return size_; }
  int covalency() const noexcept { return group_->order() - size_; }
  std::vector<int> elements() const { return mask_.indices(); }

  /// |D_1 \ S_1| over rotations (identity included), dihedral groups only.
  int l1() const {
    require_dihedral();
    const int p = group_->kernel_size();
    int in = 0;
    for (int a = 0; a < p; ++a) in += mask_.test(a);
    return p - in;
  }
  /// |D_2 \ S_2| over reflections, dihedral groups only.
  int l2() const {
    require_dihedral();
    const int p = group_->kernel_size();
    int in = 0;
    for (int a = 0; a < p; ++a) in += mask_.test(p + a);
    return p - in;
  }

  /// The (X, Y) description when S is a union of conjugacy classes.
  std::optional<NormalSubsetSpec> normal_spec() const {
    const auto& g = *group_;
    NormalSubsetSpec spec;
    for (const auto& c : g.classes()) {
      if (c.representative == g.identity()) continue;
      const int hits = static_cast<int>(std::count_if(
          c.members.begin(), c.members.end(),
          [&](int m) { return mask_.test(m); }));
      if (hits == 0) continue;
      if (hits != c.size()) return std::nullopt;
      (c.in_kernel ? spec.x_reps : spec.y_reps).push_back(c.representative);
    }
    return spec;
  }

  std::string to_string() const { return "mask:" + mask_.to_hex(); }

  friend bool operator==(const CayleySubset& a, const CayleySubset& b) {
    return a.group_->family().label() == b.group_->family().label() &&
           a.mask_ == b.mask_;
  }

 private:
  void require_dihedral() const {
    if (!group_->is_dihedral()) {
      throw ValidationError("l1/l2 split is only defined for dihedral groups");
    }
  }

  GroupPtr group_;
  ElementMask mask_;
  int size_ = 0;
};

/// Validated subset that must generate G.
inline CayleySubset make_subset(GroupPtr group, ElementMask mask) {
  CayleySubset s(std::move(group), std::move(mask));
  if (!generates(s.group(), s.mask())) {
    throw ValidationError("subset does not generate the group");
  }
  return s;
}

/// Checks that every representative names a class on the expected side of
/// N and that the union is closed under inversion.
inline void validate_normal_spec(const GroupTable& g,
                                 const NormalSubsetSpec& spec) {
  std::vector<char> chosen(g.classes().size(), 0);
  auto mark = [&](int rep, bool want_kernel) {
    if (rep < 0 || rep >= g.order()) {
      throw ValidationError("class representative out of range");
    }
    const auto& c = g.classes()[g.class_of(rep)];
    if (c.representative != rep) {
      throw ValidationError(g.element_label(rep) +
                            " is not a canonical class representative");
    }
    if (rep == g.identity()) {
      throw ValidationError("the identity class cannot be chosen");
    }
    if (c.in_kernel != want_kernel) {
      throw ValidationError(g.element_label(rep) + (want_kernel
                                                        ? " is not in the kernel"
                                                        : " lies in the kernel"));
    }
    if (chosen[g.class_of(rep)]) {
      throw ValidationError("class " + g.element_label(rep) + " chosen twice");
    }
    chosen[g.class_of(rep)] = 1;
  };
  for (int x : spec.x_reps) mark(x, true);
  for (int y : spec.y_reps) mark(y, false);
  for (std::size_t i = 0; i < g.classes().size(); ++i) {
    if (!chosen[i]) continue;
    const int inv_class = g.class_of(g.inv(g.classes()[i].representative));
    if (!chosen[inv_class]) {
      throw ValidationError("choice is not symmetric: class of " +
                            g.element_label(g.classes()[i].representative) +
                            " chosen without its inverse class");
    }
  }
}

/// S_{X,Y}; covalency equals 1 + a_X|H| + b_Y|N|.
inline CayleySubset make_normal_subset(GroupPtr group,
                                       const NormalSubsetSpec& spec,
                                       bool require_generating = true) {
  const auto& g = *group;
  validate_normal_spec(g, spec);
  ElementMask mask(g.order());
  for (const auto* reps : {&spec.x_reps, &spec.y_reps}) {
    for (int r : *reps) {
      for (int m : g.classes()[g.class_of(r)].members) mask.set(m);
    }
  }
  if (require_generating) return make_subset(std::move(group), std::move(mask));
  return CayleySubset(std::move(group), std::move(mask));
}

/// S = S_1 u S_2 from rotation exponents (bit a <-> x^a) and reflection
/// exponents (bit a <-> x^a y), each a mask of width p.
inline CayleySubset make_dihedral_subset(GroupPtr group,
                                         const ElementMask& s1,
                                         const ElementMask& s2) {
  const auto& g = *group;
  if (!g.is_dihedral()) {
    throw ValidationError("make_dihedral_subset needs a dihedral group");
  }
  const int p = g.kernel_size();
  if (s1.universe() != p || s2.universe() != p) {
    throw ValidationError("S1/S2 masks must have width p");
  }
  if (s1.test(0)) throw ValidationError("S1 must not contain the identity");
  for (int a = 1; a < p; ++a) {
    if (s1.test(a) != s1.test(p - a)) {
      throw ValidationError("S1 is not symmetric under a -> -a");
    }
  }
  ElementMask mask(g.order());
  for (int a = 0; a < p; ++a) {
    if (s1.test(a)) mask.set(a);
    if (s2.test(a)) mask.set(p + a);
  }
  return make_subset(std::move(group), std::move(mask));
}

/// S^{(l1,l2)}: all rotations except x^h for |h| <= (l1-1)/2, and all
/// reflections except x^h y for 0 <= h < l2.
inline CayleySubset make_interval_subset(GroupPtr group, int l1, int l2) {
  const auto& g = *group;
  if (!g.is_dihedral()) {
    throw ValidationError("make_interval_subset needs a dihedral group");
  }
  const int p = g.kernel_size();
  if (l1 < 1 || l1 % 2 == 0 || l1 > p) {
    throw ValidationError("l1 must be odd with 1 <= l1 <= p, got " +
                          std::to_string(l1));
  }
  if (l2 < 0 || l2 > p) {
    throw ValidationError("l2 must satisfy 0 <= l2 <= p, got " +
                          std::to_string(l2));
  }
  if (l1 == p && l2 == p) throw ValidationError("(l1, l2) = (p, p) is empty");
  ElementMask s1(p);
  ElementMask s2(p);
  const int half = (l1 - 1) / 2;
  for (int a = half + 1; a <= p - 1 - half; ++a) s1.set(a);
  for (int a = l2; a < p; ++a) s2.set(a);
  return make_dihedral_subset(std::move(group), s1, s2);
}

/// A union of conjugacy classes closed under inversion: either a single
/// self-inverse class or a class together with its inverse class.
struct SymmetricUnit {
  std::vector<int> reps;
  int weight = 0;  // sum of |Conj_N| (kernel) or |Conj_H| (off-kernel)
};

struct SymmetricUnits {
  std::vector<SymmetricUnit> kernel;
  std::vector<SymmetricUnit> off_kernel;
};

inline SymmetricUnits symmetric_units(const GroupTable& g) {
  SymmetricUnits units;
  const auto& classes = g.classes();
  std::vector<char> used(classes.size(), 0);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const auto& c = classes[i];
    if (c.representative == g.identity() || used[i]) continue;
    const auto j = static_cast<std::size_t>(g.class_of(g.inv(c.representative)));
    SymmetricUnit unit;
    unit.reps.push_back(c.representative);
    used[i] = 1;
    if (j != i) {
      unit.reps.push_back(classes[j].representative);
      used[j] = 1;
    }
    std::sort(unit.reps.begin(), unit.reps.end());
    const int divisor = c.in_kernel ? g.complement_size() : g.kernel_size();
    for (int r : unit.reps) unit.weight += classes[g.class_of(r)].size() / divisor;
    (c.in_kernel ? units.kernel : units.off_kernel).push_back(std::move(unit));
  }
  return units;
}

inline constexpr std::uint64_t kEnumerationGuard = std::uint64_t{1} << 24;

/// Calls fn(spec) for every symmetric (X, Y) with Y nonempty: X masks in the
/// outer loop, Y masks in the inner loop, both ascending.
template <class Fn>
void for_each_normal_subset(const GroupTable& g, Fn&& fn) {
  const auto units = symmetric_units(g);
  const auto nx = units.kernel.size();
  const auto ny = units.off_kernel.size();
  if (nx + ny > 62 ||
      (std::uint64_t{1} << nx) * ((std::uint64_t{1} << ny) - 1) >
          kEnumerationGuard) {
    throw GuardError("normal subset enumeration exceeds 2^24 combinations");
  }
  for (std::uint64_t xm = 0; xm < (std::uint64_t{1} << nx); ++xm) {
    for (std::uint64_t ym = 1; ym < (std::uint64_t{1} << ny); ++ym) {
      NormalSubsetSpec spec;
      for (std::size_t i = 0; i < nx; ++i) {
        if ((xm >> i) & 1u) {
          for (int r : units.kernel[i].reps) spec.x_reps.push_back(r);
        }
      }
      for (std::size_t i = 0; i < ny; ++i) {
        if ((ym >> i) & 1u) {
          for (int r : units.off_kernel[i].reps) spec.y_reps.push_back(r);
        }
      }
      std::sort(spec.x_reps.begin(), spec.x_reps.end());
      std::sort(spec.y_reps.begin(), spec.y_reps.end());
      fn(std::as_const(spec));
    }
  }
}

inline std::vector<NormalSubsetSpec> enumerate_normal_subsets(
    const GroupTable& g) {
  std::vector<NormalSubsetSpec> out;
  for_each_normal_subset(g, [&](const NormalSubsetSpec& s) { out.push_back(s); });
  return out;
}

/// A[g, h] = 1 iff g^-1 h is in S.
inline DenseSymmetricMatrix adjacency_matrix(const CayleySubset& s) {
  const auto& g = s.group();
  const int n = g.order();
  DenseSymmetricMatrix a(n);
  for (int u = 0; u < n; ++u) {
    for (int e : s.elements()) a(u, g.mul(u, e)) = 1.0;
  }
  return a;
}

namespace detail {

inline std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    out.emplace_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

inline int parse_small_int(std::string_view s, std::string_view context) {
  std::string t(s);
  if (t.empty() || t.size() > 9 ||
      t.find_first_not_of("-0123456789") != std::string::npos ||
      t.find('-', 1) != std::string::npos || t == "-") {
    throw ValidationError("bad integer '" + t + "' in " + std::string(context));
  }
  return std::stoi(t);
}

}  // namespace detail

/// Parses "normal:X=v1,v2;Y=b1,..", "interval:l1=<odd>,l2=<int>",
/// "mask:<hex>" or "complete".
///
/// In the normal form X entries are exponents v naming the class of x^v and
/// Y entries are exponents b naming the class of y^b ("y" and "y^b" also
/// accepted).
inline CayleySubset parse_subset_spec(const GroupPtr& group,
                                      std::string_view text) {
  const auto& g = *group;
  if (text == "complete") {
    ElementMask m(g.order());
    for (int e = 1; e < g.order(); ++e) m.set(e);
    return make_subset(group, std::move(m));
  }
  if (text.starts_with("mask:")) {
    return make_subset(group, ElementMask::from_hex(text.substr(5), g.order()));
  }
  if (text.starts_with("interval:")) {
    int l1 = -1;
    int l2 = -1;
    for (const auto& kv : detail::split(text.substr(9), ',')) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos) {
        throw ValidationError("interval spec expects l1=..,l2=..");
      }
      const auto key = kv.substr(0, eq);
      const int val = detail::parse_small_int(kv.substr(eq + 1), text);
      if (key == "l1") {
        l1 = val;
      } else if (key == "l2") {
        l2 = val;
      } else {
        throw ValidationError("unknown interval key '" + key + "'");
      }
    }
    if (l1 < 0 || l2 < 0) {
      throw ValidationError("interval spec needs both l1 and l2");
    }
    return make_interval_subset(group, l1, l2);
  }
  if (text.starts_with("normal:")) {
    NormalSubsetSpec spec;
    bool saw_x = false;
    bool saw_y = false;
    for (const auto& part : detail::split(text.substr(7), ';')) {
      const auto eq = part.find('=');
      if (eq == std::string::npos) {
        throw ValidationError("normal spec parts look like X=.. or Y=..");
      }
      const auto key = part.substr(0, eq);
      const auto body = part.substr(eq + 1);
      const bool is_x = key == "X";
      if (!is_x && key != "Y") {
        throw ValidationError("unknown normal spec key '" + key + "'");
      }
      (is_x ? saw_x : saw_y) = true;
      if (body.empty()) continue;
      for (auto item : detail::split(body, ',')) {
        int rep = 0;
        if (is_x) {
          const int v = detail::parse_small_int(item, text);
          if (mod_floor(v, g.kernel_size()) == 0) {
            throw ValidationError("X entries must be nonzero modulo p");
          }
          rep = g.classes()[g.class_of(g.element(v, 0))].representative;
        } else {
          int b = 0;
          if (item == "y") {
            b = 1;
          } else if (item.starts_with("y^")) {
            b = detail::parse_small_int(item.substr(2), text);
          } else {
            b = detail::parse_small_int(item, text);
          }
          if (mod_floor(b, g.complement_size()) == 0) {
            throw ValidationError("Y entries must be nonzero modulo |H|");
          }
          rep = g.classes()[g.class_of(g.element(0, b))].representative;
        }
        auto& reps = is_x ? spec.x_reps : spec.y_reps;
        if (std::find(reps.begin(), reps.end(), rep) == reps.end()) {
          reps.push_back(rep);
        }
      }
    }
    if (!saw_x || !saw_y) {
      throw ValidationError("normal spec needs both X= and Y= parts");
    }
    std::sort(spec.x_reps.begin(), spec.x_reps.end());
    std::sort(spec.y_reps.begin(), spec.y_reps.end());
    return make_normal_subset(group, spec);
  }
  throw ValidationError("unknown subset spec '" + std::string(text) + "'");
}

}  // namespace rcayley

#endif  // RCAYLEY_CAYLEY_HPP
