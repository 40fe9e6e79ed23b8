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

#ifndef RCAYLEY_DENSE_MATRIX_HPP
#define RCAYLEY_DENSE_MATRIX_HPP

#include <cstddef>
#include <vector>

namespace rcayley {

class DenseSymmetricMatrix {
 public:
  explicit DenseSymmetricMatrix(int n) : n_(n), data_(std::size_t(n) * n, 0.0) {}

  int size() const noexcept { return n_; }
  double operator()(int i, int j) const noexcept { return data_[idx(i, j)]; }
  double& operator()(int i, int j) noexcept { return data_[idx(i, j)]; }

  /// Sets A[i,j] and A[j,i] together.
  void set_symmetric(int i, int j, double v) noexcept {
    data_[idx(i, j)] = v;
    data_[idx(j, i)] = v;
  }

  bool is_symmetric() const noexcept {
    for (int i = 0; i < n_; ++i) {
      for (int j = i + 1; j < n_; ++j) {
        if ((*this)(i, j) != (*this)(j, i)) return false;
      }
    }
    return true;
  }

  double trace() const noexcept {
    double t = 0;
    for (int i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
  }

  double frobenius_norm_squared() const noexcept {
    double s = 0;
    for (double v : data_) s += v * v;
    return s;
  }

  static DenseSymmetricMatrix diagonal(const std::vector<double>& d) {
    DenseSymmetricMatrix m(static_cast<int>(d.size()));
    for (int i = 0; i < m.size(); ++i) m(i, i) = d[i];
    return m;
  }

 private:
  std::size_t idx(int i, int j) const noexcept {
    return std::size_t(i) * n_ + j;
  }

  int n_;
  std::vector<double> data_;
};

}  // namespace rcayley

#endif  // RCAYLEY_DENSE_MATRIX_HPP
