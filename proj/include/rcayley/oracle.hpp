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

// Dense symmetric eigensolver used as the brute-force reference for every
// closed-form spectrum.  Deliberately library-free: cyclic-by-row Jacobi.

#ifndef RCAYLEY_ORACLE_HPP
#define RCAYLEY_ORACLE_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "rcayley/cayley.hpp"
#include "rcayley/dense_matrix.hpp"
#include "rcayley/error.hpp"
#include "rcayley/spectrum.hpp"

namespace rcayley {

inline constexpr int kMaxOracleSize = 2000;

/// All eigenvalues of a symmetric matrix, sorted descending.
///
/// Stops once the off-diagonal Frobenius norm drops below tol * ||A||_F;
/// throws ConvergenceError after 50 sweeps.
inline std::vector<double> eigenvalues_jacobi(DenseSymmetricMatrix a,
                                              double tol = 1e-12) {
  const int n = a.size();
  if (n > kMaxOracleSize) {
    throw GuardError("eigenvalues_jacobi: n = " + std::to_string(n) +
                     " exceeds " + std::to_string(kMaxOracleSize));
  }
  if (!(tol > 0)) throw ValidationError("eigenvalues_jacobi: tol must be > 0");
  if (!a.is_symmetric()) {
    throw ValidationError("eigenvalues_jacobi: matrix is not symmetric");
  }

  const double norm = std::sqrt(a.frobenius_norm_squared());
  auto off_norm = [&] {
    double s = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) s += 2 * a(i, j) * a(i, j);
    }
    return std::sqrt(s);
  };

  constexpr int kMaxSweeps = 50;
  double off = off_norm();
  for (int sweep = 0; off >= tol * norm && norm > 0; ++sweep) {
    if (sweep == kMaxSweeps) {
      throw ConvergenceError(
          "eigenvalues_jacobi: no convergence after 50 sweeps", off);
    }
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double app = a(p, p);
        const double aqq = a(q, q);
        // Rutishauser's formulation: t = tan(theta), the smaller root.
        const double theta = (aqq - app) / (2 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1));
        const double c = 1 / std::sqrt(t * t + 1);
        const double s = t * c;
        const double tau = s / (1 + c);

        a(p, p) = app - t * apq;
        a(q, q) = aqq + t * apq;
        a(p, q) = 0;
        a(q, p) = 0;
        for (int k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double akp = a(k, p);
          const double akq = a(k, q);
          const double nkp = akp - s * (akq + tau * akp);
          const double nkq = akq + s * (akp - tau * akq);
          a(k, p) = nkp;
          a(p, k) = nkp;
          a(k, q) = nkq;
          a(q, k) = nkq;
        }
      }
    }
    off = off_norm();
  }

  std::vector<double> eig(n);
  for (int i = 0; i < n; ++i) eig[i] = a(i, i);
  std::sort(eig.begin(), eig.end(), std::greater<>());
  return eig;
}

/// Spectrum of X(S) from the adjacency matrix; one entry per eigenvalue.
inline Spectrum oracle_spectrum(const CayleySubset& s, double tol = 1e-12) {
  if (s.group().order() > kMaxOracleSize) {
    throw GuardError("oracle_spectrum: |G| = " + std::to_string(s.group().order()) +
                     " exceeds " + std::to_string(kMaxOracleSize));
  }
  Spectrum out;
  out.valency = s.size();
  out.source = SpectrumSource::oracle;
  for (double v : eigenvalues_jacobi(adjacency_matrix(s), tol)) {
    out.entries.push_back({v, 1});
  }
  return out;
}

}  // namespace rcayley

#endif  // RCAYLEY_ORACLE_HPP
