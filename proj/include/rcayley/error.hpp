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

#ifndef RCAYLEY_ERROR_HPP
#define RCAYLEY_ERROR_HPP

#include <stdexcept>
#include <string>

namespace rcayley {

/// Bad input: malformed parameters, asymmetric subsets, unsupported families.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A combinatorial or size guard was exceeded.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two independent computations of the same quantity disagree.
class MismatchError : public std::runtime_error {
 public:
  MismatchError(const std::string& what, double max_delta)
      : std::runtime_error(what), max_delta_(max_delta) {}
  double max_delta() const noexcept { return max_delta_; }

 private:
  double max_delta_;
};

/// Polynomial-membership and direct eigenvalue classification disagree.
class RouteDisagreement : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A proven property (trivial bound, extremality, ...) failed on data.
class InvariantViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

}  // namespace rcayley

#endif  // RCAYLEY_ERROR_HPP
