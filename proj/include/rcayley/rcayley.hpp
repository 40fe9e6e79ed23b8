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


// Umbrella header.

#ifndef RCAYLEY_RCAYLEY_HPP
#define RCAYLEY_RCAYLEY_HPP

#include "rcayley/bounds.hpp"
#include "rcayley/cayley.hpp"
#include "rcayley/characters.hpp"
#include "rcayley/classifier.hpp"
#include "rcayley/dense_matrix.hpp"
#include "rcayley/error.hpp"
#include "rcayley/group.hpp"
#include "rcayley/number_theory.hpp"
#include "rcayley/oracle.hpp"
#include "rcayley/prime_analytics.hpp"
#include "rcayley/spectra.hpp"
#include "rcayley/spectrum.hpp"

#endif  // RCAYLEY_RCAYLEY_HPP
