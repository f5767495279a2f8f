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

#include "nfg/scalar.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdio>

namespace nfg {

bool is_finite(Scalar z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

double max_abs(std::span<const Scalar> values) {
  double m = 0.0;
  for (const auto& v : values) m = std::max(m, std::abs(v));
  return m;
}

double max_abs_difference(std::span<const Scalar> a,
                          std::span<const Scalar> b) {
  assert(a.size() == b.size());
  double m = 0.0;
  for (size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

double relative_deviation(std::span<const Scalar> a,
                          std::span<const Scalar> b) {
  const double scale = std::max(max_abs(a), max_abs(b));
  const double diff = max_abs_difference(a, b);
  if (scale == 0.0) return 0.0;
  return diff / scale;
}

bool approx_equal(std::span<const Scalar> a, std::span<const Scalar> b,
                  Tolerance tol) {
  if (a.size() != b.size()) return false;
  const double scale = std::max(max_abs(a), max_abs(b));
  return max_abs_difference(a, b) <= std::max(tol.abs, tol.rel * scale);
}

bool approx_equal(Scalar a, Scalar b, Tolerance tol) {
  return approx_equal(std::span<const Scalar>(&a, 1),
                      std::span<const Scalar>(&b, 1), tol);
}

namespace {
// %.12g prints "-0" for negative zero; normalize so output is stable.
double clean(double x) { return x == 0.0 ? 0.0 : x; }
}  // namespace

std::string format_scalar(Scalar z) {
  char buf[64];
  // A component below the printed precision of |z| is rounding residue.
  const double mag = std::abs(z);
  const double re = std::abs(z.real()) <= 1e-12 * mag ? 0.0 : clean(z.real());
  const double im = std::abs(z.imag()) <= 1e-12 * mag ? 0.0 : clean(z.imag());
  if (std::signbit(im)) {
    std::snprintf(buf, sizeof buf, "%.12g-%.12gi", re, -im);
  } else {
    std::snprintf(buf, sizeof buf, "%.12g+%.12gi", re, im);
  }
  return buf;
}

}  // namespace nfg
