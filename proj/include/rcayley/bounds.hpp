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

// Covalency bounds for normal Cayley subsets of Frobenius groups N x| H.
//
// Covalencies of S_{X,Y} are l(a, b) = 1 + a|H| + b|N| with a in A, b in B.
// l0 is the largest such l with l <= 2(sqrt|G| - 1), below which every
// normal Cayley graph is Ramanujan; l_hat is the largest l such that every
// normal Cayley graph of covalency <= l is Ramanujan.  When r = (|N|-1)/|H|
// is at least 4 the two coincide and a witness at the next covalency is
// explicit; otherwise l_hat is found by exhaustive sweep.

#ifndef RCAYLEY_BOUNDS_HPP
#define RCAYLEY_BOUNDS_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "rcayley/cayley.hpp"
#include "rcayley/number_theory.hpp"
#include "rcayley/spectra.hpp"

namespace rcayley {

struct CovalencyLattice {
  std::vector<std::int64_t> a_values;  // ascending, a_1 = 0, a_m = r
  std::vector<std::int64_t> b_values;  // ascending, b_1 = 0
  std::int64_t kernel_size = 0;
  std::int64_t complement_size = 0;

  std::int64_t l(std::int64_t a, std::int64_t b) const {
    return 1 + a * complement_size + b * kernel_size;
  }

  /// All covalencies, ascending, each with its (a, b).
  std::vector<std::pair<std::int64_t, std::pair<std::int64_t, std::int64_t>>>
  chain() const {
    std::vector<std::pair<std::int64_t, std::pair<std::int64_t, std::int64_t>>> out;
    for (auto b : b_values) {
      for (auto a : a_values) out.push_back({l(a, b), {a, b}});
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<std::int64_t> values() const {
    std::vector<std::int64_t> out;
    for (const auto& e : chain()) out.push_back(e.first);
    return out;
  }
};

namespace detail {

/// Sums reachable by subsets of `weights`; with `nonempty` the empty subset
/// is excluded.
inline std::vector<int> reachable_sums(const std::vector<SymmetricUnit>& units,
                                       bool nonempty) {
  int total = 0;
  for (const auto& u : units) total += u.weight;
  // state 1: reachable by the empty set only, 2: by some nonempty subset
  std::vector<int> state(total + 1, 0);
  state[0] = 1;
  for (const auto& u : units) {
    for (int s = total; s >= u.weight; --s) {
      if (state[s - u.weight] != 0) state[s] |= 2;
    }
  }
  std::vector<int> sums;
  for (int s = 0; s <= total; ++s) {
    if ((state[s] & 2) || (!nonempty && (state[s] & 1))) sums.push_back(s);
  }
  return sums;
}

/// Some subset of units with the given total weight, as representatives.
inline std::optional<std::vector<int>> units_with_weight(
    const std::vector<SymmetricUnit>& units, int target) {
  const auto n = units.size();
  // reach[i][s]: weight s reachable using units i..n-1
  std::vector<std::vector<char>> reach(n + 1, std::vector<char>(target + 1, 0));
  reach[n][0] = 1;
  for (std::size_t i = n; i-- > 0;) {
    for (int s = 0; s <= target; ++s) {
      reach[i][s] = reach[i + 1][s] ||
                    (s >= units[i].weight && reach[i + 1][s - units[i].weight]);
    }
  }
  if (target < 0 || !reach[0][target]) return std::nullopt;
  std::vector<int> reps;
  int s = target;
  for (std::size_t i = 0; i < n; ++i) {
    if (reach[i + 1][s]) continue;
    reps.insert(reps.end(), units[i].reps.begin(), units[i].reps.end());
    s -= units[i].weight;
  }
  std::sort(reps.begin(), reps.end());
  return reps;
}

}  // namespace detail

inline CovalencyLattice covalency_lattice(const GroupTable& g) {
  const auto units = symmetric_units(g);
  CovalencyLattice lat;
  lat.kernel_size = g.kernel_size();
  lat.complement_size = g.complement_size();
  for (int s : detail::reachable_sums(units.kernel, false)) {
    lat.a_values.push_back(g.ratio() - s);
  }
  for (int s : detail::reachable_sums(units.off_kernel, true)) {
    lat.b_values.push_back(g.complement_size() - 1 - s);
  }
  std::sort(lat.a_values.begin(), lat.a_values.end());
  std::sort(lat.b_values.begin(), lat.b_values.end());
  return lat;
}

/// l <= 2(sqrt(n) - 1)  <=>  (l + 2)^2 <= 4n, for l >= 0.
constexpr bool within_trivial_bound(std::int64_t l, std::int64_t order) {
  return (l + 2) * (l + 2) <= 4 * order;
}

inline std::int64_t compute_l0(const CovalencyLattice& lat) {
  const std::int64_t order = lat.kernel_size * lat.complement_size;
  std::int64_t best = 0;
  for (auto l : lat.values()) {
    if (within_trivial_bound(l, order)) best = std::max(best, l);
  }
  return best;
}

inline std::int64_t compute_l0(const GroupTable& g) {
  return compute_l0(covalency_lattice(g));
}

/// 2 floor(sqrt(2p) - 1/2) - 1, evaluated as 2 floor((isqrt(8p) - 1)/2) - 1.
constexpr std::int64_t dihedral_l_hat_formula(std::int64_t p) {
  const auto s = static_cast<std::int64_t>(isqrt(static_cast<std::uint64_t>(8 * p)));
  return 2 * ((s - 1) / 2) - 1;
}

/// 2q floor((2 sqrt(pq) - 3)/(2q)) + 1, with the floor found by the integer
/// test (2qn + 3)^2 <= 4pq.
constexpr std::int64_t fpq_l_hat_formula(std::int64_t p, std::int64_t q) {
  std::int64_t n = 0;
  while ((2 * q * (n + 1) + 3) * (2 * q * (n + 1) + 3) <= 4 * p * q) ++n;
  return 2 * q * n + 1;
}

enum class BoundsMethod { closed_form, exhaustive };

inline std::string_view to_string(BoundsMethod m) {
  return m == BoundsMethod::closed_form ? "closed-form" : "exhaustive";
}

struct BoundsReport {
  std::int64_t l0 = 0;
  std::int64_t l_hat = 0;
  std::int64_t i0 = 0;       // 1-based index into A with l0 = l(a_i0, b_1)
  std::int64_t a_i0 = 0;
  std::optional<std::int64_t> l1_next;  // min{l in L : l > l0}
  /// Non-Ramanujan subset at the first failing covalency (absent when every
  /// covalency in L is Ramanujan).
  std::optional<NormalSubsetSpec> witness;
  std::optional<std::int64_t> witness_covalency;
  std::optional<RamanujanVerdict> witness_verdict;
  /// A Ramanujan subset at covalency l_hat.
  std::optional<NormalSubsetSpec> example_at_l_hat;
  BoundsMethod method = BoundsMethod::closed_form;
  std::uint64_t subsets_checked = 0;
  std::uint64_t trivial_bound_checked = 0;  // swept subsets with (l+2)^2 <= 4|G|
};

namespace detail {

inline void fill_trivial_part(const CovalencyLattice& lat, BoundsReport& rep) {
  rep.l0 = compute_l0(lat);
  const auto& a = lat.a_values;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (lat.l(a[i], lat.b_values.front()) == rep.l0) {
      rep.i0 = static_cast<std::int64_t>(i) + 1;
      rep.a_i0 = a[i];
    }
  }
  for (auto l : lat.values()) {
    if (l > rep.l0) {
      rep.l1_next = l;
      break;
    }
  }
}

}  // namespace detail

inline constexpr std::uint64_t kSweepGuard = std::uint64_t{1} << 30;

/// Exhaustive l_hat: covalencies in ascending order, every normal subset of
/// each covalency, stopping at the first covalency with a non-Ramanujan
/// member. Every subset inside the trivial bound must be Ramanujan;
/// otherwise InvariantViolation.
inline BoundsReport verify_l_hat(const GroupTable& g,
                                 std::uint64_t guard = kSweepGuard) {
  const auto lat = covalency_lattice(g);
  const auto units = symmetric_units(g);
  const FrobeniusData data(g);
  const std::int64_t order = g.order();

  BoundsReport rep;
  rep.method = BoundsMethod::exhaustive;
  detail::fill_trivial_part(lat, rep);

  // Eigenvalues are linear in the chosen classes: precompute each unit's
  // contribution (trivial row first) and add them up along the search.
  auto contribution = [&](const SymmetricUnit& u, bool kernel) {
    NormalSubsetSpec one;
    (kernel ? one.x_reps : one.y_reps) = u.reps;
    std::vector<double> v;
    for (const auto& e : frobenius_eigenvalues<double>(data, one)) v.push_back(e.value);
    return v;
  };
  std::vector<std::vector<double>> x_vec;
  std::vector<std::vector<double>> y_vec;
  for (const auto& u : units.kernel) x_vec.push_back(contribution(u, true));
  for (const auto& u : units.off_kernel) y_vec.push_back(contribution(u, false));
  const std::size_t dim = 1 + (g.complement_size() - 1) +
                          static_cast<std::size_t>(g.ratio());

  // Y choices grouped by weight (few of them).
  struct YChoice {
    std::vector<int> reps;
    std::vector<double> vec;
  };
  std::vector<std::vector<YChoice>> y_by_weight(g.complement_size());
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << units.off_kernel.size()); ++m) {
    YChoice c;
    c.vec.assign(dim, 0.0);
    int w = 0;
    for (std::size_t i = 0; i < units.off_kernel.size(); ++i) {
      if (((m >> i) & 1u) == 0) continue;
      w += units.off_kernel[i].weight;
      c.reps.insert(c.reps.end(), units.off_kernel[i].reps.begin(),
                    units.off_kernel[i].reps.end());
      for (std::size_t d = 0; d < dim; ++d) c.vec[d] += y_vec[i][d];
    }
    std::sort(c.reps.begin(), c.reps.end());
    y_by_weight[w].push_back(std::move(c));
  }

  std::vector<int> suffix_weight(units.kernel.size() + 1, 0);
  for (std::size_t i = units.kernel.size(); i-- > 0;) {
    suffix_weight[i] = suffix_weight[i + 1] + units.kernel[i].weight;
  }

  std::optional<std::int64_t> last_good;
  for (const auto& [l, ab] : lat.chain()) {
    const auto [a, b] = ab;
    const int x_target = g.ratio() - static_cast<int>(a);
    const auto& ys = y_by_weight[g.complement_size() - 1 - b];
    bool failed = false;
    std::optional<NormalSubsetSpec> example;

    std::vector<int> chosen;
    std::vector<std::vector<double>> acc(units.kernel.size() + 1,
                                         std::vector<double>(dim, 0.0));
    auto leaf = [&](const std::vector<double>& xv) {
      for (const auto& y : ys) {
        if (++rep.subsets_checked > guard) {
          throw GuardError("normal subset sweep exceeds guard");
        }
        const double k = xv[0] + y.vec[0];
        double mu = 0;
        for (std::size_t d = 1; d < dim; ++d) {
          const double lam = std::abs(xv[d] + y.vec[d]);
          if (std::abs(lam - k) < kBorderlineGuard) continue;
          mu = std::max(mu, lam);
        }
        auto v = make_verdict(mu, static_cast<std::int64_t>(std::llround(k)));
        auto spec = [&] {
          NormalSubsetSpec s;
          for (int i : chosen) {
            s.x_reps.insert(s.x_reps.end(), units.kernel[i].reps.begin(),
                            units.kernel[i].reps.end());
          }
          std::sort(s.x_reps.begin(), s.x_reps.end());
          s.y_reps = y.reps;
          return s;
        };
        if (v.status == VerdictStatus::borderline) v = normal_verdict(data, spec());
        if (within_trivial_bound(l, order)) ++rep.trivial_bound_checked;
        if (!v.ramanujan) {
          if (within_trivial_bound(l, order)) {
            throw InvariantViolation(
                "normal subset inside the trivial bound is not Ramanujan (l = " +
                std::to_string(l) + ")");
          }
          rep.witness = spec();
          rep.witness_covalency = l;
          rep.witness_verdict = v;
          failed = true;
          return;
        }
        if (!example) example = spec();
      }
    };
    // Subsets of kernel units with total weight x_target, in lexicographic
    // order of unit indices.
    auto dfs = [&](auto&& self, std::size_t i, int remaining) -> void {
      if (failed) return;
      if (remaining == 0) {
        leaf(acc[i]);
        return;
      }
      if (i == units.kernel.size() || remaining > suffix_weight[i]) return;
      if (units.kernel[i].weight <= remaining) {
        chosen.push_back(static_cast<int>(i));
        for (std::size_t d = 0; d < dim; ++d) acc[i + 1][d] = acc[i][d] + x_vec[i][d];
        self(self, i + 1, remaining - units.kernel[i].weight);
        chosen.pop_back();
        if (failed) return;
      }
      acc[i + 1] = acc[i];
      self(self, i + 1, remaining);
    };
    if (!ys.empty()) dfs(dfs, 0, x_target);
    if (failed) break;
    last_good = l;
    rep.example_at_l_hat = example;
  }
  rep.l_hat = last_good.value_or(0);
  return rep;
}

/// l_hat via the fast path when r >= 4, else by exhaustive sweep.
inline BoundsReport compute_l_hat(const GroupTable& g) {
  if (g.ratio() < 4) return verify_l_hat(g);

  const auto lat = covalency_lattice(g);
  BoundsReport rep;
  rep.method = BoundsMethod::closed_form;
  detail::fill_trivial_part(lat, rep);

  // a_i0 = max{a in A : a|H| + 3 <= 2 sqrt(|N||H|)}
  const std::int64_t h = g.complement_size();
  const std::int64_t n = g.kernel_size();
  std::size_t i0 = 0;
  for (std::size_t i = 0; i < lat.a_values.size(); ++i) {
    const auto t = lat.a_values[i] * h + 3;
    if (t * t <= 4 * n * h) i0 = i;
  }
  if (rep.i0 != static_cast<std::int64_t>(i0) + 1 || rep.l0 != lat.l(lat.a_values[i0], 0)) {
    throw InvariantViolation("trivial bound and a_i0 characterisation disagree");
  }
  if (i0 + 1 >= lat.a_values.size()) {
    throw InvariantViolation("no covalency above l0 below |N| although r >= 4");
  }
  rep.l_hat = rep.l0;
  const auto a_next = lat.a_values[i0 + 1];
  const auto l_next = lat.l(a_next, 0);
  rep.l1_next = l_next;

  const auto units = symmetric_units(g);
  NormalSubsetSpec witness;
  witness.x_reps = detail::units_with_weight(units.kernel, g.ratio() - static_cast<int>(a_next))
                       .value();
  for (const auto& u : units.off_kernel) {
    witness.y_reps.insert(witness.y_reps.end(), u.reps.begin(), u.reps.end());
  }
  std::sort(witness.y_reps.begin(), witness.y_reps.end());

  const FrobeniusData data(g);
  const auto eig = frobenius_eigenvalues<double>(data, witness);
  // Rows 1..q-1 are the characters lifted from H: each equals -l(S).
  for (int alpha = 1; alpha < g.complement_size(); ++alpha) {
    if (std::abs(eig[alpha].value + static_cast<double>(l_next)) > 1e-10) {
      throw InvariantViolation("lifted eigenvalue of the witness is not -l(S)");
    }
  }
  const auto v = normal_verdict(data, witness);
  if (v.ramanujan) throw InvariantViolation("closed-form witness is Ramanujan");
  NormalSubsetSpec example;
  example.x_reps =
      detail::units_with_weight(units.kernel, g.ratio() - static_cast<int>(lat.a_values[i0]))
          .value();
  example.y_reps = witness.y_reps;
  rep.example_at_l_hat = example;
  rep.witness = witness;
  rep.witness_covalency = l_next;
  rep.witness_verdict = v;
  if (rep.l_hat >= n) throw InvariantViolation("l_hat >= |N| although r >= 4");
  return rep;
}

}  // namespace rcayley

#endif  // RCAYLEY_BOUNDS_HPP
