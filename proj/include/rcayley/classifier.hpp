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

// Exceptional and ordinary primes for Cayley graphs of D_2p over all
// (not necessarily normal) Cayley subsets.
//
// For p >= 29 the all-subset bound l_tilde is l_hat or l_hat + 1. When
// floor(2 sqrt(2p)) is even it is always l_hat + 1 (p is ordinary). When it
// is odd, p is exceptional iff the interval subset of covalency l_hat + 1
// with the most balanced split (l1, l2) is Ramanujan, which happens iff
// p = 2k^2 + (r+3)k + c for one of six (r, c) pairs and k large enough.
// classify_prime evaluates both characterisations and insists they agree.

#ifndef RCAYLEY_CLASSIFIER_HPP
#define RCAYLEY_CLASSIFIER_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "rcayley/bounds.hpp"
#include "rcayley/cayley.hpp"
#include "rcayley/number_theory.hpp"
#include "rcayley/spectra.hpp"

namespace rcayley {

/// f(t) = 2t^2 + (r+3)t + c with c in {r-4, r-2, r}.
struct QuadraticFamily {
  int r = 1;
  int c = 1;
  int k_min = 3;

  std::int64_t value(std::int64_t k) const { return 2 * k * k + (r + 3) * k + c; }
  std::int64_t discriminant() const { return std::int64_t{r + 3} * (r + 3) - 8 * c; }
  /// c' with D = 4c': 4 - 2c for r = 1, 9 - 2c for r = 3.
  std::int64_t reduced_c() const { return r == 1 ? 4 - 2 * c : 9 - 2 * c; }
  std::string label() const {
    return "(" + std::to_string(r) + "," + std::to_string(c) + ")";
  }
};

inline const std::array<QuadraticFamily, 6>& quadratic_families() {
  static const std::array<QuadraticFamily, 6> kFamilies{{
      {1, -3, 5},
      {1, -1, 3},
      {1, 1, 3},
      {3, -1, 7},
      {3, 1, 3},
      {3, 3, 3},
  }};
  return kFamilies;
}

inline std::optional<QuadraticFamily> find_family(int r, std::int64_t c) {
  for (const auto& f : quadratic_families()) {
    if (f.r == r && f.c == c) return f;
  }
  return std::nullopt;
}

inline QuadraticFamily family_or_throw(int r, std::int64_t c) {
  auto f = find_family(r, c);
  if (!f) {
    throw ValidationError("(r, c) = (" + std::to_string(r) + ", " +
                          std::to_string(c) + ") is not one of the six families");
  }
  return *f;
}

struct ExtremalSplit {
  int l1 = 1;
  int l2 = 0;
};

/// Most balanced (l1, l2) with l1 + l2 = l and l1 odd; for l = l_hat + 1 this
/// is ((l_hat+1)/2, (l_hat+1)/2) if l_hat = 1 mod 4 and
/// ((l_hat+3)/2, (l_hat-1)/2) otherwise.
inline ExtremalSplit extremal_split(std::int64_t l) {
  if (l < 1) throw ValidationError("covalency must be positive");
  ExtremalSplit s;
  if (l % 2 == 0) {
    const auto half = static_cast<int>(l / 2);
    s = half % 2 == 1 ? ExtremalSplit{half, half} : ExtremalSplit{half + 1, half - 1};
  } else {
    const auto lo = static_cast<int>((l - 1) / 2);
    s = lo % 2 == 1 ? ExtremalSplit{lo, lo + 1} : ExtremalSplit{lo + 1, lo};
  }
  if (s.l1 % 2 == 0 || s.l1 + s.l2 != l || s.l2 < 0) {
    throw InvariantViolation("extremal split lost parity");
  }
  return s;
}

/// |mu_1| of the interval subset S^{(l1,l2)} in D_2p:
/// 2 sin(pi l / 2p) / sin(pi / p) * cos(pi |l1 - l2| / 2p).
template <std::floating_point Real = double>
Real interval_mu1(std::int64_t p, std::int64_t l1, std::int64_t l2) {
  const Real pi = std::numbers::pi_v<Real>;
  const auto pr = static_cast<Real>(p);
  const auto l = static_cast<Real>(l1 + l2);
  const auto diff = static_cast<Real>(l1 > l2 ? l1 - l2 : l2 - l1);
  return Real{2} * std::sin(pi * l / (2 * pr)) / std::sin(pi / pr) *
         std::cos(pi * diff / (2 * pr));
}

struct ExtremalMu {
  double mu1 = 0;
  ExtremalSplit split;
  bool heuristic = false;  // l != l_hat + 1: no maximality guarantee
  std::optional<CayleySubset> witness;
};

inline ExtremalMu extremal_mu(std::int64_t p, std::int64_t l) {
  if (p < 3 || !is_prime(static_cast<std::uint64_t>(p))) {
    throw ValidationError("extremal_mu: p must be an odd prime");
  }
  if (l < 1 || l >= 2 * p) throw ValidationError("extremal_mu: covalency out of range");
  ExtremalMu out;
  out.split = extremal_split(l);
  if (out.split.l1 > p || out.split.l2 > p) {
    throw ValidationError("extremal_mu: split exceeds p");
  }
  out.mu1 = interval_mu1<double>(p, out.split.l1, out.split.l2);
  out.heuristic = l != dihedral_l_hat_formula(p) + 1;
  return out;
}

/// As above, with the interval subset itself as witness.
inline ExtremalMu extremal_mu(const GroupPtr& group, std::int64_t l) {
  if (!group->is_dihedral()) throw ValidationError("extremal_mu needs D_2p");
  auto out = extremal_mu(group->kernel_size(), l);
  out.witness = make_interval_subset(group, out.split.l1, out.split.l2);
  return out;
}

/// floor(2 sqrt(2t)) for real t >= 0; exact via isqrt for integral t.
inline std::int64_t floor_two_sqrt_two(long double t) {
  if (t == std::floor(t) && t < 1e18L) {
    return static_cast<std::int64_t>(isqrt(static_cast<std::uint64_t>(8 * t)));
  }
  return static_cast<std::int64_t>(std::floor(2.0L * std::sqrt(2.0L * t)));
}

/// F_r(t) = 2 sin(pi(4k+r+1)/2t)/sin(pi/t) cos(pi(r-1)/2t) - 2 sqrt(2t-4k-r-2)
/// on I_{r,k} = {t : floor(2 sqrt(2t)) - 2 = 4k + r}. Negative exactly when
/// the extremal subset of covalency l_hat + 1 is Ramanujan.
template <std::floating_point Real = double>
Real F_r_eval(int r, std::int64_t k, Real t) {
  if (r != 1 && r != 3) throw ValidationError("F_r: r must be 1 or 3");
  if (floor_two_sqrt_two(static_cast<long double>(t)) - 2 != 4 * k + r) {
    throw ValidationError("F_r: t lies outside I_{r,k}");
  }
  const Real pi = std::numbers::pi_v<Real>;
  const auto top = static_cast<Real>(4 * k + r + 1);
  return Real{2} * std::sin(pi * top / (2 * t)) / std::sin(pi / t) *
             std::cos(pi * static_cast<Real>(r - 1) / (2 * t)) -
         Real{2} * std::sqrt(2 * t - static_cast<Real>(4 * k + r + 2));
}

enum class PrimeVerdict { exceptional, ordinary };

inline std::string_view to_string(PrimeVerdict v) {
  return v == PrimeVerdict::exceptional ? "exceptional" : "ordinary";
}

struct PrimeClassification {
  std::int64_t p = 0;
  std::int64_t floor2sqrt2p = 0;
  bool parity_odd = false;
  std::int64_t l_hat = 0;
  int r = 1;
  std::int64_t k = 0;
  std::int64_t c = 0;
  bool in_family = false;
  ExtremalSplit split;
  double mu1 = 0;
  double rb = 0;
  bool escalated = false;  // mu1 vs rb compared in extended precision
  PrimeVerdict verdict = PrimeVerdict::ordinary;
  std::int64_t tilde_l = 0;
  int epsilon = 1;
};

inline constexpr std::int64_t kClassifierMinPrime = 29;

inline PrimeClassification classify_prime(std::int64_t p) {
  if (p < kClassifierMinPrime || !is_prime(static_cast<std::uint64_t>(p))) {
    throw ValidationError("classify_prime: p must be a prime >= 29, got " +
                          std::to_string(p));
  }
  PrimeClassification pc;
  pc.p = p;
  pc.floor2sqrt2p = static_cast<std::int64_t>(isqrt(static_cast<std::uint64_t>(8 * p)));
  pc.parity_odd = pc.floor2sqrt2p % 2 == 1;
  pc.l_hat = dihedral_l_hat_formula(p);
  pc.r = static_cast<int>(pc.l_hat % 4);
  pc.k = pc.l_hat / 4;
  pc.c = p - 2 * pc.k * pc.k - (pc.r + 3) * pc.k;

  if (const auto fam = find_family(pc.r, pc.c)) pc.in_family = pc.k >= fam->k_min;
  if (pc.in_family && !pc.parity_odd) {
    throw InvariantViolation("family member " + std::to_string(p) +
                             " with even floor(2 sqrt(2p))");
  }
  if (pc.parity_odd && pc.floor2sqrt2p - 2 != 4 * pc.k + pc.r) {
    throw InvariantViolation("p is not in I_{r,k} for its own (r, k)");
  }

  pc.split = extremal_split(pc.l_hat + 1);
  pc.mu1 = interval_mu1<double>(p, pc.split.l1, pc.split.l2);
  pc.rb = 2.0 * std::sqrt(static_cast<double>(2 * p - pc.l_hat - 2));
  bool extremal_ramanujan = pc.mu1 <= pc.rb;
  if (std::abs(pc.mu1 - pc.rb) < kBorderlineGuard) {
    pc.escalated = true;
    const auto mu = interval_mu1<long double>(p, pc.split.l1, pc.split.l2);
    const auto rb = 2.0L * std::sqrt(static_cast<long double>(2 * p - pc.l_hat - 2));
    extremal_ramanujan = mu <= rb;
  }

  if (pc.parity_odd && extremal_ramanujan != pc.in_family) {
    throw RouteDisagreement(
        "p = " + std::to_string(p) + ": family membership says " +
        (pc.in_family ? "exceptional" : "ordinary") + " but mu1 = " +
        std::to_string(pc.mu1) + " vs RB = " + std::to_string(pc.rb));
  }
  const bool exceptional = pc.parity_odd && extremal_ramanujan;
  pc.verdict = exceptional ? PrimeVerdict::exceptional : PrimeVerdict::ordinary;
  pc.epsilon = (!pc.parity_odd || exceptional) ? 1 : 0;
  pc.tilde_l = pc.l_hat + pc.epsilon;
  return pc;
}

// ---------------------------------------------------------------------------
// Exhaustive sweeps over all Cayley subsets of small D_2p.

namespace detail {

/// For prime p, <S> = D_2p iff S contains a reflection and either a
/// non-trivial rotation or a second reflection.
constexpr bool dihedral_generates(std::size_t n_rot, std::size_t n_ref) {
  return n_ref >= 1 && (n_rot >= 1 || n_ref >= 2);
}

inline void rotations_from_pairs(int p, std::uint64_t pair_mask, std::vector<int>& s1) {
  s1.clear();
  for (int v = 1; v <= (p - 1) / 2; ++v) {
    if ((pair_mask >> (v - 1)) & 1u) {
      s1.push_back(v);
      s1.push_back(p - v);
    }
  }
}

inline void reflections_from_mask(int p, std::uint64_t mask, std::vector<int>& s2) {
  s2.clear();
  for (int a = 0; a < p; ++a) {
    if ((mask >> a) & 1u) s2.push_back(a);
  }
}

inline CayleySubset dihedral_subset_from(const GroupPtr& g, const std::vector<int>& s1,
                                         const std::vector<int>& s2) {
  const int p = g->kernel_size();
  ElementMask m1(p);
  ElementMask m2(p);
  for (int a : s1) m1.set(a);
  for (int a : s2) m2.set(a);
  return make_dihedral_subset(g, m1, m2);
}

}  // namespace detail

struct CovalencyStats {
  std::int64_t l = 0;
  std::uint64_t subsets = 0;
  bool all_ramanujan = true;
  double max_mu = 0;
};

struct TildeReport {
  std::int64_t p = 0;
  std::int64_t tilde_l = 0;
  std::vector<CovalencyStats> by_covalency;  // ascending l
  std::optional<CayleySubset> witness;       // non-Ramanujan, covalency tilde_l + 1
  std::optional<RamanujanVerdict> witness_verdict;
  std::uint64_t subsets_checked = 0;
};

inline constexpr int kTildeMaxPrime = 13;

/// l_tilde for p <= 13 by sweeping every symmetric generating subset.
inline TildeReport tilde_l_exhaustive(int p) {
  if (p < 3 || !is_prime(static_cast<std::uint64_t>(p))) {
    throw ValidationError("tilde_l_exhaustive: p must be an odd prime");
  }
  if (p > kTildeMaxPrime) {
    throw GuardError("tilde_l_exhaustive: p = " + std::to_string(p) +
                     " exceeds the exhaustive limit 13");
  }
  const auto group = build_dihedral(p);
  const DihedralKernel<double> kernel(p);
  TildeReport rep;
  rep.p = p;
  std::vector<CovalencyStats> stats(2 * p + 1);
  std::vector<std::optional<std::pair<std::vector<int>, std::vector<int>>>> first_bad(2 * p + 1);
  std::vector<std::optional<RamanujanVerdict>> first_bad_verdict(2 * p + 1);

  std::vector<int> s1;
  std::vector<int> s2;
  for (std::uint64_t pm = 0; pm < (std::uint64_t{1} << ((p - 1) / 2)); ++pm) {
    detail::rotations_from_pairs(p, pm, s1);
    for (std::uint64_t rm = 1; rm < (std::uint64_t{1} << p); ++rm) {
      detail::reflections_from_mask(p, rm, s2);
      if (!detail::dihedral_generates(s1.size(), s2.size())) continue;
      const auto l = static_cast<std::int64_t>(2 * p - s1.size() - s2.size());
      const auto v = dihedral_verdict(kernel, s1, s2);
      auto& st = stats[l];
      st.l = l;
      ++st.subsets;
      ++rep.subsets_checked;
      st.max_mu = std::max(st.max_mu, v.mu);
      if (!v.ramanujan && st.all_ramanujan) {
        st.all_ramanujan = false;
        first_bad[l] = std::make_pair(s1, s2);
        first_bad_verdict[l] = v;
      }
    }
  }
  bool broken = false;
  for (std::int64_t l = 1; l <= 2 * p; ++l) {
    if (stats[l].subsets == 0) continue;
    rep.by_covalency.push_back(stats[l]);
    if (broken) continue;
    if (stats[l].all_ramanujan) {
      rep.tilde_l = l;
    } else {
      broken = true;
      rep.witness = detail::dihedral_subset_from(group, first_bad[l]->first,
                                                 first_bad[l]->second);
      rep.witness_verdict = first_bad_verdict[l];
    }
  }
  return rep;
}

struct ExtremalityReport {
  std::int64_t p = 0;
  std::int64_t l = 0;
  ExtremalSplit split;
  double mu_extremal = 0;
  double max_mu = 0;
  std::string max_mu_subset;  // mask:<hex> of a maximiser, when a table exists
  std::uint64_t subsets = 0;
  std::uint64_t violations = 0;
  bool exhaustive = false;
};

inline constexpr double kExtremalityTolerance = 1e-9;

namespace detail {

inline std::string dihedral_mask_string(int p, const std::vector<int>& s1,
                                        const std::vector<int>& s2) {
  ElementMask m(2 * p);
  for (int a : s1) m.set(a);
  for (int a : s2) m.set(p + a);
  return "mask:" + m.to_hex();
}

inline void require_l_hat_plus_one(std::int64_t p, std::int64_t l) {
  if (p < 11) throw ValidationError("extremality check needs p >= 11");
  if (l != dihedral_l_hat_formula(p) + 1) {
    throw ValidationError("extremality check runs at covalency l_hat + 1 = " +
                          std::to_string(dihedral_l_hat_formula(p) + 1));
  }
}

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  unsigned __int128 r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
  if (r > UINT64_MAX) throw GuardError("binomial coefficient overflows 64 bits");
  return static_cast<std::uint64_t>(r);
}

}  // namespace detail

/// Uniform sampler over symmetric generating subsets S of D_2p with a
/// fixed covalency l. The split l1 (odd) is drawn with weight
/// C((p-1)/2, (l1-1)/2) C(p, l - l1), then the removed rotation pairs and
/// reflections uniformly.
class DihedralCovalencySampler {
 public:
  DihedralCovalencySampler(int p, std::int64_t l) : p_(p), l_(l) {
    if (p < 3 || !is_prime(static_cast<std::uint64_t>(p))) {
      throw ValidationError("sampler: p must be an odd prime");
    }
    if (l < 1 || l > 2 * p - 2) throw ValidationError("sampler: covalency out of range");
    for (int l1 = 1; l1 <= std::min<std::int64_t>(p, l); l1 += 2) {
      const auto l2 = static_cast<int>(l - l1);
      if (l2 > p) continue;
      const auto w = detail::binomial((p - 1) / 2, (l1 - 1) / 2) * detail::binomial(p, l2);
      if (w == 0) continue;
      if (total_ > UINT64_MAX - w) throw GuardError("subset count overflows 64 bits");
      total_ += w;
      weights_.emplace_back(l1, total_);
    }
    if (weights_.empty()) throw ValidationError("sampler: no subset has this covalency");
    pairs_.resize((p - 1) / 2);
    reflections_.resize(p);
    for (int v = 1; v <= (p - 1) / 2; ++v) pairs_[v - 1] = v;
    for (int a = 0; a < p; ++a) reflections_[a] = a;
  }

  int p() const { return p_; }
  std::int64_t covalency() const { return l_; }

  /// Fills s1 (rotation exponents) and s2 (reflection exponents).
  template <class Rng>
  void draw(Rng& rng, std::vector<int>& s1, std::vector<int>& s2) {
    std::uniform_int_distribution<std::uint64_t> pick(0, total_ - 1);
    do {
      const auto ticket = pick(rng);
      const int l1 = std::upper_bound(weights_.begin(), weights_.end(), ticket,
                                      [](std::uint64_t t, const auto& w) { return t < w.second; })
                         ->first;
      const auto l2 = static_cast<int>(l_ - l1);
      removed_pairs_.assign(pairs_.size(), 0);
      removed_refl_.assign(reflections_.size(), 0);
      picked_.clear();
      std::sample(pairs_.begin(), pairs_.end(), std::back_inserter(picked_), (l1 - 1) / 2, rng);
      for (int v : picked_) removed_pairs_[v - 1] = 1;
      picked_.clear();
      std::sample(reflections_.begin(), reflections_.end(), std::back_inserter(picked_), l2, rng);
      for (int a : picked_) removed_refl_[a] = 1;
      s1.clear();
      for (int v : pairs_) {
        if (!removed_pairs_[v - 1]) {
          s1.push_back(v);
          s1.push_back(p_ - v);
        }
      }
      s2.clear();
      for (int a : reflections_) {
        if (!removed_refl_[a]) s2.push_back(a);
      }
    } while (!detail::dihedral_generates(s1.size(), s2.size()));
  }

 private:
  int p_;
  std::int64_t l_;
  std::uint64_t total_ = 0;
  std::vector<std::pair<int, std::uint64_t>> weights_;
  std::vector<int> pairs_;
  std::vector<int> reflections_;
  std::vector<char> removed_pairs_;
  std::vector<char> removed_refl_;
  std::vector<int> picked_;
};

/// Draws n_samples uniform symmetric generating subsets of covalency
/// l = l_hat + 1 and checks mu(S) <= mu(extremal) + 1e-9 for each. A
/// violation throws InvariantViolation carrying the offending mask.
inline ExtremalityReport sample_extremality(int p, std::int64_t l, std::uint64_t n_samples,
                                            std::uint64_t seed) {
  if (p < 3 || !is_prime(static_cast<std::uint64_t>(p))) {
    throw ValidationError("sample_extremality: p must be an odd prime");
  }
  detail::require_l_hat_plus_one(p, l);
  if (n_samples < 1) throw ValidationError("sample_extremality: n_samples >= 1");

  ExtremalityReport rep;
  rep.p = p;
  rep.l = l;
  const auto ext = extremal_mu(p, l);
  rep.split = ext.split;
  rep.mu_extremal = ext.mu1;

  DihedralCovalencySampler sampler(p, l);
  std::mt19937_64 rng(seed);
  const DihedralKernel<double> kernel(p);
  std::vector<int> s1;
  std::vector<int> s2;
  while (rep.subsets < n_samples) {
    sampler.draw(rng, s1, s2);
    ++rep.subsets;
    const double mu = kernel.mu(s1, s2);
    if (mu > rep.max_mu) {
      rep.max_mu = mu;
      rep.max_mu_subset = detail::dihedral_mask_string(p, s1, s2);
    }
    if (mu > rep.mu_extremal + kExtremalityTolerance) {
      ++rep.violations;
      throw InvariantViolation("extremality violated at p = " + std::to_string(p) +
                               " by " + detail::dihedral_mask_string(p, s1, s2) +
                               ": mu = " + std::to_string(mu) + " > " +
                               std::to_string(rep.mu_extremal));
    }
  }
  return rep;
}

/// Same check over every subset of covalency l_hat + 1 (p <= 13).
inline ExtremalityReport exhaustive_extremality(int p) {
  if (p < 3 || !is_prime(static_cast<std::uint64_t>(p))) {
    throw ValidationError("exhaustive_extremality: p must be an odd prime");
  }
  if (p > kTildeMaxPrime) throw GuardError("exhaustive_extremality: p > 13");
  const auto l = dihedral_l_hat_formula(p) + 1;
  detail::require_l_hat_plus_one(p, l);
  ExtremalityReport rep;
  rep.p = p;
  rep.l = l;
  rep.exhaustive = true;
  const auto ext = extremal_mu(p, l);
  rep.split = ext.split;
  rep.mu_extremal = ext.mu1;
  const DihedralKernel<double> kernel(p);
  std::vector<int> s1;
  std::vector<int> s2;
  for (std::uint64_t pm = 0; pm < (std::uint64_t{1} << ((p - 1) / 2)); ++pm) {
    detail::rotations_from_pairs(p, pm, s1);
    for (std::uint64_t rm = 1; rm < (std::uint64_t{1} << p); ++rm) {
      detail::reflections_from_mask(p, rm, s2);
      if (2 * p - static_cast<std::int64_t>(s1.size() + s2.size()) != l) continue;
      if (!detail::dihedral_generates(s1.size(), s2.size())) continue;
      ++rep.subsets;
      const double mu = kernel.mu(s1, s2);
      if (mu > rep.max_mu) {
        rep.max_mu = mu;
        rep.max_mu_subset = detail::dihedral_mask_string(p, s1, s2);
      }
      if (mu > rep.mu_extremal + kExtremalityTolerance) {
        ++rep.violations;
        throw InvariantViolation("extremality violated at p = " + std::to_string(p) +
                                 " by " + detail::dihedral_mask_string(p, s1, s2));
      }
    }
  }
  return rep;
}

}  // namespace rcayley

#endif  // RCAYLEY_CLASSIFIER_HPP
