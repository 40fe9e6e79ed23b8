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

#ifndef RCAYLEY_SPECTRUM_HPP
#define RCAYLEY_SPECTRUM_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "rcayley/error.hpp"

namespace rcayley {

enum class SpectrumSource { character_formula, zw_formula, oracle };

inline std::string_view to_string(SpectrumSource s) {
  switch (s) {
    case SpectrumSource::character_formula: return "character-formula";
    case SpectrumSource::zw_formula: return "zw-formula";
    case SpectrumSource::oracle: return "oracle";
  }
  return "?";
}

struct SpectrumEntry {
  double value = 0;
  std::int64_t multiplicity = 1;
};

/// Eigenvalue multiset of a k-regular Cayley graph. Entries are kept per
/// character (or per oracle eigenvalue) without merging nearby values.
struct Spectrum {
  std::vector<SpectrumEntry> entries;  // descending by value
  std::int64_t valency = 0;
  SpectrumSource source = SpectrumSource::character_formula;

  void sort_descending() {
    std::stable_sort(entries.begin(), entries.end(),
                     [](const auto& a, const auto& b) { return a.value > b.value; });
  }

  std::int64_t total_multiplicity() const {
    std::int64_t n = 0;
    for (const auto& e : entries) n += e.multiplicity;
    return n;
  }

  /// Every eigenvalue repeated by multiplicity, descending.
  std::vector<double> values() const {
    std::vector<double> v;
    v.reserve(static_cast<std::size_t>(total_multiplicity()));
    for (const auto& e : entries) v.insert(v.end(), e.multiplicity, e.value);
    std::sort(v.begin(), v.end(), std::greater<>());
    return v;
  }

  double trace() const {
    double t = 0;
    for (const auto& e : entries) t += e.value * e.multiplicity;
    return t;
  }

  double trace_of_square() const {
    double t = 0;
    for (const auto& e : entries) t += e.value * e.value * e.multiplicity;
    return t;
  }
};

/// Largest |difference| between the two sorted eigenvalue lists.
inline double max_abs_difference(const Spectrum& a, const Spectrum& b) {
  const auto va = a.values();
  const auto vb = b.values();
  if (va.size() != vb.size()) {
    throw MismatchError("spectra have different sizes", INFINITY);
  }
  double m = 0;
  for (std::size_t i = 0; i < va.size(); ++i) {
    m = std::max(m, std::abs(va[i] - vb[i]));
  }
  return m;
}

/// Throws InvariantViolation unless the multiset is consistent with a
/// k-regular graph on `order` vertices without loops.
inline void check_spectrum_invariants(const Spectrum& s, std::int64_t order) {
  if (s.total_multiplicity() != order) {
    throw InvariantViolation("spectrum multiplicities sum to " +
                             std::to_string(s.total_multiplicity()) +
                             ", expected " + std::to_string(order));
  }
  const auto v = s.values();
  if (v.empty() || std::abs(v.front() - static_cast<double>(s.valency)) > 1e-8) {
    throw InvariantViolation("largest eigenvalue differs from the valency");
  }
  if (std::abs(s.trace()) > 1e-8 * static_cast<double>(order)) {
    throw InvariantViolation("eigenvalue sum is not zero");
  }
  const double expected = static_cast<double>(order) * static_cast<double>(s.valency);
  if (std::abs(s.trace_of_square() - expected) > 1e-6 * static_cast<double>(order)) {
    throw InvariantViolation("eigenvalue square sum differs from |G||S|");
  }
}

inline constexpr double kBorderlineGuard = 1e-9;

enum class VerdictStatus { ramanujan, not_ramanujan, borderline };

inline std::string_view to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::ramanujan: return "ramanujan";
    case VerdictStatus::not_ramanujan: return "not_ramanujan";
    case VerdictStatus::borderline: return "borderline";
  }
  return "?";
}

struct RamanujanVerdict {
  double mu = 0;     // largest |eigenvalue| with |eigenvalue| != k
  double bound = 0;  // 2 sqrt(k - 1)
  VerdictStatus status = VerdictStatus::ramanujan;
  double margin = 0;  // mu - bound
  /// Final decision. Equal to status for non-borderline verdicts; for
  /// borderline ones it is filled in by an extended-precision recomputation
  /// (see settle_borderline in spectra.hpp).
  bool ramanujan = true;
  bool escalated = false;
};

inline RamanujanVerdict make_verdict(double mu, std::int64_t valency) {
  RamanujanVerdict v;
  v.mu = mu;
  v.bound = 2.0 * std::sqrt(static_cast<double>(valency - 1));
  v.margin = v.mu - v.bound;
  if (std::abs(v.margin) < kBorderlineGuard) {
    v.status = VerdictStatus::borderline;
    v.ramanujan = v.margin <= 0;
  } else {
    v.status = v.margin < 0 ? VerdictStatus::ramanujan : VerdictStatus::not_ramanujan;
    v.ramanujan = v.margin < 0;
  }
  return v;
}

/// mu(X) = max{|l| : l in spectrum, |l| != k}; both +k and -k are excluded.
/// A spectrum made of +-k only yields mu = 0.
inline double nontrivial_mu(const std::vector<double>& values, std::int64_t valency) {
  const auto k = static_cast<double>(valency);
  double mu = 0;
  for (double l : values) {
    if (std::abs(std::abs(l) - k) < kBorderlineGuard) continue;
    mu = std::max(mu, std::abs(l));
  }
  return mu;
}

inline RamanujanVerdict verdict(const Spectrum& s) {
  if (s.entries.empty()) throw ValidationError("verdict: empty spectrum");
  std::vector<double> vals;
  vals.reserve(s.entries.size());
  for (const auto& e : s.entries) vals.push_back(e.value);
  return make_verdict(nontrivial_mu(vals, s.valency), s.valency);
}

}  // namespace rcayley

#endif  // RCAYLEY_SPECTRUM_HPP
