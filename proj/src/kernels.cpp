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

#include "nfg/kernels.hpp"

#include <cassert>
#include <numeric>

namespace nfg::kernels {
namespace {

std::vector<size_t> row_major_strides(std::span<const size_t> shape) {
  std::vector<size_t> s(shape.size(), 1);
  for (size_t p = shape.size(); p-- > 1;) s[p - 1] = s[p] * shape[p];
  return s;
}

size_t volume(std::span<const size_t> dims) {
  return std::accumulate(dims.begin(), dims.end(), size_t{1},
                         std::multiplies<>());
}

// A generic "out[o] = sum_c f[fo(o) + fc(c)] * g[go(o) + gc(c)]" reduction.
// g may be absent (single-operand trace).
struct Reduction {
  std::vector<size_t> out_dims, out_f, out_g;
  std::vector<size_t> in_dims, in_f, in_g;
};

// Offsets of the first element for output index o.
void decode(size_t o, std::span<const size_t> dims, std::span<const size_t> sf,
            std::span<const size_t> sg, size_t& fo, size_t& go) {
  fo = 0;
  go = 0;
  for (size_t k = dims.size(); k-- > 0;) {
    const size_t c = o % dims[k];
    o /= dims[k];
    fo += c * sf[k];
    go += c * sg[k];
  }
}

// Sum of inner configurations [lo, hi) walked with an odometer.
Scalar inner_sum(const Reduction& r, std::span<const Scalar> f,
                 std::span<const Scalar> g, size_t fo, size_t go, size_t lo,
                 size_t hi) {
  const size_t k = r.in_dims.size();
  std::vector<size_t> digit(k);
  size_t fi = fo, gi = go;
  {
    size_t rest = lo;
    for (size_t d = k; d-- > 0;) {
      digit[d] = rest % r.in_dims[d];
      rest /= r.in_dims[d];
      fi += digit[d] * r.in_f[d];
      gi += digit[d] * r.in_g[d];
    }
  }
  const bool has_g = !g.empty();
  Scalar acc{};
  for (size_t c = lo; c < hi; ++c) {
    acc += has_g ? f[fi] * g[gi] : f[fi];
    for (size_t d = k; d-- > 0;) {
      if (++digit[d] < r.in_dims[d]) {
        fi += r.in_f[d];
        gi += r.in_g[d];
        break;
      }
      fi -= (r.in_dims[d] - 1) * r.in_f[d];
      gi -= (r.in_dims[d] - 1) * r.in_g[d];
      digit[d] = 0;
    }
  }
  return acc;
}

std::vector<Scalar> run(const Reduction& r, std::span<const Scalar> f,
                        std::span<const Scalar> g) {
  const size_t n_out = volume(r.out_dims);
  const size_t n_in = volume(r.in_dims);
  std::vector<Scalar> out(n_out);
  if (n_out >= 64 || n_in <= kBlockSize) {
    const auto n = static_cast<long long>(n_out);
#pragma omp parallel for schedule(static)
    for (long long o = 0; o < n; ++o) {
      size_t fo, go;
      decode(static_cast<size_t>(o), r.out_dims, r.out_f, r.out_g, fo, go);
      out[static_cast<size_t>(o)] = inner_sum(r, f, g, fo, go, 0, n_in);
    }
    return out;
  }
  // Few outputs with a long inner sum: split the inner range into blocks.
  const size_t blocks = (n_in + kBlockSize - 1) / kBlockSize;
  std::vector<Scalar> partial(n_out * blocks);
  const auto jobs = static_cast<long long>(n_out * blocks);
#pragma omp parallel for schedule(dynamic, 1)
  for (long long j = 0; j < jobs; ++j) {
    const size_t o = static_cast<size_t>(j) / blocks;
    const size_t b = static_cast<size_t>(j) % blocks;
    size_t fo, go;
    decode(o, r.out_dims, r.out_f, r.out_g, fo, go);
    const size_t lo = b * kBlockSize;
    const size_t hi = std::min(n_in, lo + kBlockSize);
    partial[static_cast<size_t>(j)] = inner_sum(r, f, g, fo, go, lo, hi);
  }
  for (size_t o = 0; o < n_out; ++o) {
    Scalar acc{};
    for (size_t b = 0; b < blocks; ++b) acc += partial[o * blocks + b];
    out[o] = acc;
  }
  return out;
}

}  // namespace

std::vector<Scalar> contract(const PairContraction& spec,
                             std::span<const Scalar> f,
                             std::span<const Scalar> g) {
  const auto fs = row_major_strides(spec.f_shape);
  const auto gs = row_major_strides(spec.g_shape);
  std::vector<bool> f_paired(spec.f_shape.size()), g_paired(spec.g_shape.size());
  Reduction r;
  for (auto [fp, gp] : spec.pairing) {
    assert(spec.f_shape[fp] == spec.g_shape[gp]);
    f_paired[fp] = true;
    g_paired[gp] = true;
    r.in_dims.push_back(spec.f_shape[fp]);
    r.in_f.push_back(fs[fp]);
    r.in_g.push_back(gs[gp]);
  }
  for (size_t p = 0; p < spec.f_shape.size(); ++p) {
    if (f_paired[p]) continue;
    r.out_dims.push_back(spec.f_shape[p]);
    r.out_f.push_back(fs[p]);
    r.out_g.push_back(0);
  }
  for (size_t p = 0; p < spec.g_shape.size(); ++p) {
    if (g_paired[p]) continue;
    r.out_dims.push_back(spec.g_shape[p]);
    r.out_f.push_back(0);
    r.out_g.push_back(gs[p]);
  }
  return run(r, f, g);
}

std::vector<Scalar> trace(std::span<const size_t> shape,
                          std::span<const std::pair<size_t, size_t>> pairs,
                          std::span<const Scalar> f) {
  const auto fs = row_major_strides(shape);
  std::vector<bool> used(shape.size());
  Reduction r;
  for (auto [a, b] : pairs) {
    assert(shape[a] == shape[b]);
    used[a] = used[b] = true;
    r.in_dims.push_back(shape[a]);
    r.in_f.push_back(fs[a] + fs[b]);
    r.in_g.push_back(0);
  }
  for (size_t p = 0; p < shape.size(); ++p) {
    if (used[p]) continue;
    r.out_dims.push_back(shape[p]);
    r.out_f.push_back(fs[p]);
    r.out_g.push_back(0);
  }
  return run(r, f, {});
}

std::vector<Scalar> sum_of_products(const SumOfProducts& problem) {
  const size_t n_slots = problem.radices.size();
  const size_t n_outer = problem.n_outer;
  const std::span<const size_t> radices(problem.radices);
  const size_t out_size = volume(radices.first(n_outer));
  const size_t in_size = volume(radices.subspan(n_outer));
  const size_t n_factors = problem.factors.size();

  // Per slot, the factors it feeds and the (summed) stride it contributes.
  std::vector<std::vector<std::pair<size_t, size_t>>> touches(n_slots);
  for (size_t v = 0; v < n_factors; ++v) {
    const auto& fv = problem.factors[v];
    for (size_t p = 0; p < fv.slots.size(); ++p) {
      auto& list = touches[fv.slots[p]];
      if (!list.empty() && list.back().first == v) {
        list.back().second += fv.strides[p];
      } else {
        list.emplace_back(v, fv.strides[p]);
      }
    }
  }

  const size_t blocks = std::max<size_t>(1, (in_size + kBlockSize - 1) / kBlockSize);
  std::vector<Scalar> partial(out_size * blocks);
  const auto jobs = static_cast<long long>(out_size * blocks);

#pragma omp parallel for schedule(dynamic, 1)
  for (long long j = 0; j < jobs; ++j) {
    const size_t o = static_cast<size_t>(j) / blocks;
    const size_t b = static_cast<size_t>(j) % blocks;
    const size_t lo = b * kBlockSize;
    const size_t hi = std::min(in_size, lo + kBlockSize);

    std::vector<size_t> digit(n_slots);
    size_t rest = o;
    for (size_t s = n_outer; s-- > 0;) {
      digit[s] = rest % radices[s];
      rest /= radices[s];
    }
    rest = lo;
    for (size_t s = n_slots; s-- > n_outer;) {
      digit[s] = rest % radices[s];
      rest /= radices[s];
    }
    std::vector<size_t> offset(n_factors, 0);
    for (size_t s = 0; s < n_slots; ++s) {
      for (auto [v, stride] : touches[s]) offset[v] += digit[s] * stride;
    }

    Scalar acc{};
    for (size_t c = lo; c < hi; ++c) {
      Scalar prod{1.0, 0.0};
      for (size_t v = 0; v < n_factors; ++v) {
        prod *= problem.factors[v].values[offset[v]];
      }
      acc += prod;
      for (size_t s = n_slots; s-- > n_outer;) {
        if (++digit[s] < radices[s]) {
          for (auto [v, stride] : touches[s]) offset[v] += stride;
          break;
        }
        for (auto [v, stride] : touches[s]) offset[v] -= (radices[s] - 1) * stride;
        digit[s] = 0;
      }
    }
    partial[static_cast<size_t>(j)] = acc;
  }

  std::vector<Scalar> out(out_size);
  for (size_t o = 0; o < out_size; ++o) {
    Scalar acc{};
    for (size_t b = 0; b < blocks; ++b) acc += partial[o * blocks + b];
    out[o] = acc;
  }
  return out;
}

namespace serial {

std::vector<Scalar> contract(const PairContraction& spec,
                             std::span<const Scalar> f,
                             std::span<const Scalar> g) {
  const size_t nf = spec.f_shape.size();
  const size_t ng = spec.g_shape.size();
  std::vector<bool> f_paired(nf), g_paired(ng);
  for (auto [fp, gp] : spec.pairing) f_paired[fp] = g_paired[gp] = true;
  std::vector<size_t> out_shape;
  for (size_t p = 0; p < nf; ++p)
    if (!f_paired[p]) out_shape.push_back(spec.f_shape[p]);
  for (size_t p = 0; p < ng; ++p)
    if (!g_paired[p]) out_shape.push_back(spec.g_shape[p]);
  std::vector<Scalar> out(volume(out_shape));

  std::vector<size_t> fc(nf), gc(ng);
  for (size_t i = 0; i < f.size(); ++i) {
    size_t rest = i;
    for (size_t p = nf; p-- > 0;) {
      fc[p] = rest % spec.f_shape[p];
      rest /= spec.f_shape[p];
    }
    for (size_t j = 0; j < g.size(); ++j) {
      rest = j;
      for (size_t p = ng; p-- > 0;) {
        gc[p] = rest % spec.g_shape[p];
        rest /= spec.g_shape[p];
      }
      bool agree = true;
      for (auto [fp, gp] : spec.pairing) agree = agree && fc[fp] == gc[gp];
      if (!agree) continue;
      size_t o = 0;
      size_t k = 0;
      for (size_t p = 0; p < nf; ++p)
        if (!f_paired[p]) o = o * out_shape[k++] + fc[p];
      for (size_t p = 0; p < ng; ++p)
        if (!g_paired[p]) o = o * out_shape[k++] + gc[p];
      out[o] += f[i] * g[j];
    }
  }
  return out;
}

std::vector<Scalar> trace(std::span<const size_t> shape,
                          std::span<const std::pair<size_t, size_t>> pairs,
                          std::span<const Scalar> f) {
  const size_t n = shape.size();
  std::vector<bool> used(n);
  for (auto [a, b] : pairs) used[a] = used[b] = true;
  std::vector<size_t> out_shape;
  for (size_t p = 0; p < n; ++p)
    if (!used[p]) out_shape.push_back(shape[p]);
  std::vector<Scalar> out(volume(out_shape));
  std::vector<size_t> c(n);
  for (size_t i = 0; i < f.size(); ++i) {
    size_t rest = i;
    for (size_t p = n; p-- > 0;) {
      c[p] = rest % shape[p];
      rest /= shape[p];
    }
    bool diag = true;
    for (auto [a, b] : pairs) diag = diag && c[a] == c[b];
    if (!diag) continue;
    size_t o = 0, k = 0;
    for (size_t p = 0; p < n; ++p)
      if (!used[p]) o = o * out_shape[k++] + c[p];
    out[o] += f[i];
  }
  return out;
}

std::vector<Scalar> sum_of_products(const SumOfProducts& problem) {
  const size_t n_slots = problem.radices.size();
  const std::span<const size_t> radices(problem.radices);
  const size_t total = volume(radices);
  const size_t in_size = volume(radices.subspan(problem.n_outer));
  std::vector<Scalar> out(volume(radices.first(problem.n_outer)));
  std::vector<size_t> x(n_slots);
  for (size_t i = 0; i < total; ++i) {
    size_t rest = i;
    for (size_t s = n_slots; s-- > 0;) {
      x[s] = rest % radices[s];
      rest /= radices[s];
    }
    Scalar prod{1.0, 0.0};
    for (const auto& fv : problem.factors) {
      size_t off = 0;
      for (size_t p = 0; p < fv.slots.size(); ++p) off += x[fv.slots[p]] * fv.strides[p];
      prod *= fv.values[off];
    }
    out[i / in_size] += prod;
  }
  return out;
}

}  // namespace serial
}  // namespace nfg::kernels
