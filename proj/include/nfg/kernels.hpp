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

#ifndef NFG_KERNELS_HPP_
#define NFG_KERNELS_HPP_

// Dense inner loops shared by the library. Every kernel in nfg::kernels is
// OpenMP-parallel and deterministic: work is split into fixed blocks whose
// boundaries do not depend on the thread count, each block is summed in
// index order, and block results are combined in index order. The
// nfg::kernels::serial namespace holds straightforward reference versions
// used by tests and benchmarks.

#include <cstddef>
#include <span>
#include <vector>

#include "nfg/scalar.hpp"

namespace nfg::kernels {

// Work items per deterministic reduction block.
inline constexpr size_t kBlockSize = size_t{1} << 12;

// Shapes and strides of a two-operand contraction.
struct PairContraction {
  std::vector<size_t> f_shape;
  std::vector<size_t> g_shape;
  std::vector<std::pair<size_t, size_t>> pairing;  // (f port, g port)
};

// Output laid out as unpaired f ports then unpaired g ports, row-major.
std::vector<Scalar> contract(const PairContraction& spec,
                             std::span<const Scalar> f,
                             std::span<const Scalar> g);

// Sum over the diagonal of each port pair. Output is the remaining ports.
std::vector<Scalar> trace(std::span<const size_t> shape,
                          std::span<const std::pair<size_t, size_t>> pairs,
                          std::span<const Scalar> f);

// One factor of a product-of-functions sum. Port p of the factor reads
// configuration slot slots[p] with stride strides[p].
struct FactorView {
  std::span<const Scalar> values;
  std::vector<size_t> slots;
  std::vector<size_t> strides;
};

// Configuration slots [0, n_outer) are kept (output axes, row-major) and
// slots [n_outer, radices.size()) are summed over:
//   out[o] = sum_inner prod_factors factor(o, inner).
struct SumOfProducts {
  std::vector<size_t> radices;
  size_t n_outer = 0;
  std::vector<FactorView> factors;
};

std::vector<Scalar> sum_of_products(const SumOfProducts& problem);

// Deterministic parallel sum of f(i) for i in [0, n); f must be thread-safe.
template <typename F>
Scalar blocked_sum(size_t n, F&& f);

namespace serial {

std::vector<Scalar> contract(const PairContraction& spec,
                             std::span<const Scalar> f,
                             std::span<const Scalar> g);
std::vector<Scalar> trace(std::span<const size_t> shape,
                          std::span<const std::pair<size_t, size_t>> pairs,
                          std::span<const Scalar> f);
std::vector<Scalar> sum_of_products(const SumOfProducts& problem);

}  // namespace serial

// ---------------------------------------------------------------------------

template <typename F>
Scalar blocked_sum(size_t n, F&& f) {
  const size_t blocks = (n + kBlockSize - 1) / kBlockSize;
  std::vector<Scalar> partial(blocks);
  const auto nb = static_cast<long long>(blocks);
#pragma omp parallel for schedule(dynamic, 1)
  for (long long b = 0; b < nb; ++b) {
    const size_t lo = static_cast<size_t>(b) * kBlockSize;
    const size_t hi = lo + kBlockSize < n ? lo + kBlockSize : n;
    Scalar acc{};
    for (size_t i = lo; i < hi; ++i) acc += f(i);
    partial[static_cast<size_t>(b)] = acc;
  }
  Scalar total{};
  for (const auto& p : partial) total += p;
  return total;
}

}  // namespace nfg::kernels

#endif  // NFG_KERNELS_HPP_
