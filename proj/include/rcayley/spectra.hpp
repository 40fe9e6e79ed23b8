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

// Closed-form Cayley graph spectra.
//
//  * normal_spectrum: for S a union of classes, one eigenvalue per irreducible
//    character, lambda_chi = (1/chi(1)) sum_{s in S} chi(s), repeated chi(1)^2
//    times.
//  * frobenius_spectrum: the same multiset through the specialised formulas
//    for N x| H (trivial, lifted-from-H and induced-from-N rows), evaluated
//    directly on the multiplication table.
//  * dihedral_zw / dihedral_spectrum: arbitrary symmetric subsets of D_2p via
//    z_j = sum_{x^a in S_1} w^{ja}, w_j = sum_{x^a y in S_2} w^{ja}, with
//    eigenvalues z_j +- |w_j|.

#ifndef RCAYLEY_SPECTRA_HPP
#define RCAYLEY_SPECTRA_HPP

#include <cmath>
#include <complex>
#include <concepts>
#include <numbers>
#include <span>
#include <vector>

#include "rcayley/cayley.hpp"
#include "rcayley/characters.hpp"
#include "rcayley/spectrum.hpp"

namespace rcayley {

/// Compensated (Kahan) accumulator.
template <class T>
class KahanSum {
 public:
  void add(T x) {
    const T y = x - c_;
    const T t = sum_ + y;
    c_ = (t - sum_) - y;
    sum_ = t;
  }
  T value() const { return sum_; }

 private:
  T sum_{};
  T c_{};
};

inline constexpr double kImaginaryResidueLimit = 1e-10;

namespace detail {

template <std::floating_point Real>
Real checked_real(std::complex<Real> z, const char* where) {
  if (std::abs(z.imag()) > static_cast<Real>(kImaginaryResidueLimit)) {
    throw InvariantViolation(std::string(where) +
                             ": eigenvalue has imaginary residue " +
                             std::to_string(static_cast<double>(z.imag())) +
                             " (non-symmetric subset?)");
  }
  return z.real();
}

template <std::floating_point Real>
struct RawEigenvalue {
  Real value;
  std::int64_t multiplicity;
};

template <std::floating_point Real>
Spectrum to_spectrum(const std::vector<RawEigenvalue<Real>>& raw,
                     std::int64_t valency, SpectrumSource source) {
  Spectrum s;
  s.valency = valency;
  s.source = source;
  for (const auto& r : raw) {
    s.entries.push_back({static_cast<double>(r.value), r.multiplicity});
  }
  s.sort_descending();
  return s;
}

inline int subset_size(const GroupTable& g, const NormalSubsetSpec& spec) {
  int n = 0;
  for (const auto* reps : {&spec.x_reps, &spec.y_reps}) {
    for (int r : *reps) n += g.classes()[g.class_of(r)].size();
  }
  return n;
}

}  // namespace detail

/// lambda_chi for every irreducible chi, in character-table row order.
template <std::floating_point Real = double>
std::vector<detail::RawEigenvalue<Real>> normal_eigenvalues(
    const GroupTable& g, const BasicCharacterTable<Real>& table,
    const NormalSubsetSpec& spec, bool compensated = false) {
  std::vector<detail::RawEigenvalue<Real>> out;
  out.reserve(table.rows.size());
  for (const auto& row : table.rows) {
    KahanSum<Real> re;
    KahanSum<Real> im;
    Real plain_re = 0;
    Real plain_im = 0;
    for (const auto* reps : {&spec.x_reps, &spec.y_reps}) {
      for (int r : *reps) {
        const int ci = g.class_of(r);
        const auto term = static_cast<Real>(g.classes()[ci].size()) * row.values[ci];
        if (compensated) {
          re.add(term.real());
          im.add(term.imag());
        } else {
          plain_re += term.real();
          plain_im += term.imag();
        }
      }
    }
    const std::complex<Real> sum = compensated
                                       ? std::complex<Real>(re.value(), im.value())
                                       : std::complex<Real>(plain_re, plain_im);
    const Real lambda =
        detail::checked_real(sum / static_cast<Real>(row.degree), "normal_spectrum");
    out.push_back({lambda, std::int64_t{row.degree} * row.degree});
  }
  return out;
}

inline Spectrum normal_spectrum(const GroupTable& g, const CharacterTable& table,
                                const NormalSubsetSpec& spec) {
  validate_normal_spec(g, spec);
  return detail::to_spectrum(normal_eigenvalues(g, table, spec),
                             detail::subset_size(g, spec),
                             SpectrumSource::character_formula);
}

inline Spectrum normal_spectrum(const GroupTable& g, const NormalSubsetSpec& spec) {
  return normal_spectrum(g, character_table(g), spec);
}

/// Data shared by every frobenius_spectrum call on one group: conjugation
/// orbits and character values of N and H read off the multiplication table.
class FrobeniusData {
 public:
  explicit FrobeniusData(const GroupTable& g) : g_(&g) {
    const int p = g.kernel_size();
    const int q = g.complement_size();
    for (int b = 0; b < q; ++b) complement_.push_back(g.element(0, b));
    conj_n_size_.assign(g.order(), 0);
    conj_h_size_.assign(g.order(), 0);
    for (const auto& c : g.classes()) {
      const int rep = c.representative;
      std::vector<char> seen(g.order(), 0);
      int count = 0;
      if (c.in_kernel) {
        for (int a = 0; a < p; ++a) {
          const int k = g.conjugate(rep, g.element(a, 0));
          count += !seen[k];
          seen[k] = 1;
        }
        conj_n_size_[rep] = count;
      } else {
        for (int z : complement_) {
          const int k = g.conjugate(rep, z);
          count += !seen[k];
          seen[k] = 1;
        }
        conj_h_size_[rep] = count;
      }
    }
    betas_ = coset_representatives(p, g.family().u, q);
  }

  const GroupTable& group() const { return *g_; }
  const std::vector<int>& complement() const { return complement_; }
  const std::vector<int>& betas() const { return betas_; }
  int conj_n_size(int rep) const { return conj_n_size_[rep]; }
  int conj_h_size(int rep) const { return conj_h_size_[rep]; }

 private:
  const GroupTable* g_;
  std::vector<int> complement_;
  std::vector<int> conj_n_size_;
  std::vector<int> conj_h_size_;
  std::vector<int> betas_;
};

/// Spectrum of S_{X,Y} from the specialised formulas
///   lambda_1      = |H| sum_X |Conj_N(x)| + |N| sum_Y |Conj_H(y)|
///   lambda_chi_a  = |H| sum_X |Conj_N(x)| + |N|/chi_a(1) sum_Y chi_a(y)|Conj_H(y)|
///   lambda_phi_b  = 1/psi_b(1) sum_X sum_{z in H} psi_b(x^z) |Conj_N(x)|
/// with multiplicities 1, chi_a(1)^2 and |H|^2 psi_b(1)^2.
template <std::floating_point Real = double>
std::vector<detail::RawEigenvalue<Real>> frobenius_eigenvalues(
    const FrobeniusData& data, const NormalSubsetSpec& spec) {
  const auto& g = data.group();
  const int p = g.kernel_size();
  const int q = g.complement_size();
  std::int64_t x_part = 0;
  for (int x : spec.x_reps) x_part += data.conj_n_size(x);
  x_part *= q;
  std::int64_t y_count = 0;
  for (int y : spec.y_reps) y_count += data.conj_h_size(y);

  std::vector<detail::RawEigenvalue<Real>> out;
  out.push_back({static_cast<Real>(x_part + std::int64_t{p} * y_count), 1});

  for (int alpha = 1; alpha < q; ++alpha) {
    std::complex<Real> ysum{0, 0};
    for (int y : spec.y_reps) {
      ysum += static_cast<Real>(data.conj_h_size(y)) *
              root_of_unity<Real>(std::int64_t{alpha} * g.y_exponent(y), q);
    }
    const auto lambda = static_cast<Real>(x_part) + static_cast<Real>(p) * ysum;
    out.push_back({detail::checked_real(lambda, "frobenius_spectrum"), 1});
  }

  for (int beta : data.betas()) {
    std::complex<Real> sum{0, 0};
    for (int x : spec.x_reps) {
      for (int z : data.complement()) {
        const int xz = g.conjugate(x, z);  // lies in N, so index = exponent
        sum += static_cast<Real>(data.conj_n_size(x)) *
               root_of_unity<Real>(std::int64_t{beta} * g.x_exponent(xz), p);
      }
    }
    out.push_back({detail::checked_real(sum, "frobenius_spectrum"),
                   std::int64_t{q} * q});
  }
  return out;
}

inline Spectrum frobenius_spectrum(const FrobeniusData& data,
                                   const NormalSubsetSpec& spec) {
  validate_normal_spec(data.group(), spec);
  return detail::to_spectrum(frobenius_eigenvalues(data, spec),
                             detail::subset_size(data.group(), spec),
                             SpectrumSource::character_formula);
}

inline Spectrum frobenius_spectrum(const GroupTable& g, const NormalSubsetSpec& spec) {
  return frobenius_spectrum(FrobeniusData(g), spec);
}

/// Final decision after extended-precision recomputation: Ramanujan iff
/// mu <= bound up to a relative tie tolerance of 1e-12 (exact ties such as
/// integer eigenvalues on an integer bound count as Ramanujan).
inline void settle_borderline(RamanujanVerdict& v, long double mu,
                              std::int64_t valency) {
  const long double bound = 2.0L * std::sqrt(static_cast<long double>(valency - 1));
  const long double tie = 1e-12L * std::max(1.0L, bound);
  v.escalated = true;
  v.ramanujan = mu <= bound + tie;
}

/// Verdict for S_{X,Y}; a borderline double result is recomputed with
/// compensated long double sums before the final decision.
inline RamanujanVerdict normal_verdict(const FrobeniusData& data,
                                       const NormalSubsetSpec& spec) {
  const auto raw = frobenius_eigenvalues<double>(data, spec);
  const auto k = static_cast<std::int64_t>(std::llround(raw.front().value));
  std::vector<double> vals;
  for (const auto& r : raw) vals.push_back(r.value);
  auto v = make_verdict(nontrivial_mu(vals, k), k);
  if (v.status == VerdictStatus::borderline) {
    const auto table = character_table<long double>(data.group());
    const auto ext = normal_eigenvalues<long double>(data.group(), table, spec, true);
    long double mu = 0;
    for (const auto& r : ext) {
      if (std::abs(std::abs(r.value) - static_cast<long double>(k)) < 1e-9L) continue;
      mu = std::max(mu, std::abs(r.value));
    }
    settle_borderline(v, mu, k);
  }
  return v;
}

struct DihedralSpectrumData {
  int p = 0;
  std::vector<double> z;                // z_0 = |S_1| + |S_2|
  std::vector<std::complex<double>> w;  // w_0 = |S_1| - |S_2|

  /// |mu_j| = |z_j| + |w_j| for j >= 1.
  double abs_mu(int j) const { return std::abs(z[j]) + std::abs(w[j]); }
};

/// Precomputed cos/sin of 2 pi m / p, m = 0..p-1, for repeated z/w sums.
template <std::floating_point Real>
class DihedralKernel {
 public:
  explicit DihedralKernel(int p) : p_(p), cos_(p), sin_(p) {
    for (int m = 0; m < p; ++m) {
      const Real angle =
          Real{2} * std::numbers::pi_v<Real> * static_cast<Real>(m) / static_cast<Real>(p);
      cos_[m] = std::cos(angle);
      sin_[m] = std::sin(angle);
    }
  }

  int p() const { return p_; }

  /// z_j (real part). With `check`, the imaginary part is accumulated too
  /// and must vanish, as it does for symmetric S_1.
  Real z(int j, std::span<const int> s1, bool check = false) const {
    KahanSum<Real> re;
    KahanSum<Real> im;
    for (int a : s1) {
      const int m = static_cast<int>((std::int64_t{j} * a) % p_);
      re.add(cos_[m]);
      if (check) im.add(sin_[m]);
    }
    if (check) {
      detail::checked_real(std::complex<Real>(re.value(), im.value()),
                           "dihedral_zw");
    }
    return re.value();
  }

  std::complex<Real> w(int j, std::span<const int> s2, bool compensated = false) const {
    KahanSum<Real> re;
    KahanSum<Real> im;
    Real pr = 0;
    Real pi = 0;
    for (int a : s2) {
      const int m = static_cast<int>((std::int64_t{j} * a) % p_);
      if (compensated) {
        re.add(cos_[m]);
        im.add(sin_[m]);
      } else {
        pr += cos_[m];
        pi += sin_[m];
      }
    }
    return compensated ? std::complex<Real>(re.value(), im.value())
                       : std::complex<Real>(pr, pi);
  }

  /// mu(S): largest |eigenvalue| other than +-|S|, over j = 0..p-1.
  Real mu(std::span<const int> s1, std::span<const int> s2,
          bool compensated = false) const {
    const auto k = static_cast<Real>(s1.size() + s2.size());
    Real best = 0;
    auto consider = [&](Real l) {
      if (std::abs(std::abs(l) - k) < static_cast<Real>(kBorderlineGuard)) return;
      best = std::max(best, std::abs(l));
    };
    consider(static_cast<Real>(s1.size()) - static_cast<Real>(s2.size()));
    // j and p - j give the same pair of eigenvalues.
    for (int j = 1; j <= (p_ - 1) / 2; ++j) {
      const Real zj = z(j, s1, compensated);
      const Real wj = std::abs(w(j, s2, compensated));
      consider(zj + wj);
      consider(zj - wj);
    }
    return best;
  }

 private:
  int p_;
  std::vector<Real> cos_;
  std::vector<Real> sin_;
};

namespace detail {

inline void split_dihedral(const CayleySubset& s, std::vector<int>& s1,
                           std::vector<int>& s2) {
  const auto& g = s.group();
  if (!g.is_dihedral()) {
    throw ValidationError("z/w spectra need a dihedral group");
  }
  const int p = g.kernel_size();
  for (int e : s.elements()) (e < p ? s1 : s2).push_back(e % p);
}

}  // namespace detail

inline DihedralSpectrumData dihedral_zw(const CayleySubset& s) {
  std::vector<int> s1;
  std::vector<int> s2;
  detail::split_dihedral(s, s1, s2);
  const int p = s.group().kernel_size();
  DihedralKernel<double> kernel(p);
  DihedralSpectrumData d;
  d.p = p;
  d.z.resize(p);
  d.w.resize(p);
  const auto n1 = static_cast<double>(s1.size());
  const auto n2 = static_cast<double>(s2.size());
  d.z[0] = n1 + n2;
  d.w[0] = {n1 - n2, 0.0};
  for (int j = 1; j < p; ++j) {
    d.z[j] = kernel.z(j, s1, true);
    d.w[j] = kernel.w(j, s2);
  }
  return d;
}

/// 2p eigenvalues: z_j +- |w_j| for j >= 1, and |S_1| +- |S_2| for j = 0
/// (the trivial and sign characters).
inline Spectrum dihedral_spectrum(const CayleySubset& s) {
  const auto d = dihedral_zw(s);
  Spectrum out;
  out.valency = s.size();
  out.source = SpectrumSource::zw_formula;
  out.entries.push_back({d.z[0], 1});
  out.entries.push_back({d.w[0].real(), 1});
  for (int j = 1; j < d.p; ++j) {
    const double wa = std::abs(d.w[j]);
    out.entries.push_back({d.z[j] + wa, 1});
    out.entries.push_back({d.z[j] - wa, 1});
  }
  out.sort_descending();
  return out;
}

/// Verdict for a symmetric dihedral subset given as rotation exponents s1
/// and reflection exponents s2, with long double escalation when borderline.
inline RamanujanVerdict dihedral_verdict(const DihedralKernel<double>& kernel,
                                         std::span<const int> s1,
                                         std::span<const int> s2) {
  const auto k = static_cast<std::int64_t>(s1.size() + s2.size());
  auto v = make_verdict(kernel.mu(s1, s2), k);
  if (v.status == VerdictStatus::borderline) {
    const DihedralKernel<long double> ext(kernel.p());
    settle_borderline(v, ext.mu(s1, s2, true), k);
  }
  return v;
}

inline RamanujanVerdict dihedral_verdict(const CayleySubset& s) {
  std::vector<int> s1;
  std::vector<int> s2;
  detail::split_dihedral(s, s1, s2);
  return dihedral_verdict(DihedralKernel<double>(s.group().kernel_size()), s1, s2);
}

}  // namespace rcayley

#endif  // RCAYLEY_SPECTRA_HPP
