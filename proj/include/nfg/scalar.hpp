// Copyright 2026 The nfg Authors.
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

#ifndef NFG_SCALAR_HPP_
#define NFG_SCALAR_HPP_

#include <complex>
#include <span>
#include <string>

namespace nfg {

using Scalar = std::complex<double>;

// Comparison thresholds. Two value arrays agree when
//   max_i |a_i - b_i| <= max(abs, rel * max(|a|_inf, |b|_inf)).
struct Tolerance {
  double rel = 1e-9;
  double abs = 1e-12;
};

inline constexpr Tolerance kDefaultTolerance{};

bool is_finite(Scalar z);

double max_abs(std::span<const Scalar> values);
double max_abs_difference(std::span<const Scalar> a, std::span<const Scalar> b);

// Normwise relative deviation max|a-b| / max(|a|_inf, |b|_inf); zero when both
// arrays vanish. Arrays must have equal length.
double relative_deviation(std::span<const Scalar> a, std::span<const Scalar> b);

bool approx_equal(std::span<const Scalar> a, std::span<const Scalar> b,
                  Tolerance tol = kDefaultTolerance);
bool approx_equal(Scalar a, Scalar b, Tolerance tol = kDefaultTolerance);

// "a+bi" with 12 significant digits, e.g. "3+0i", "0.5-1.25i".
std::string format_scalar(Scalar z);

}  // namespace nfg

#endif  // NFG_SCALAR_HPP_
