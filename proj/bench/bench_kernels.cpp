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

// Serial reference vs OpenMP kernels, plus the two brute-force evaluators.

#include <benchmark/benchmark.h>

#include "nfg/evaluate.hpp"
#include "nfg/kernels.hpp"
#include "nfg/perfmatch.hpp"
#include "nfg/random.hpp"

namespace {

using nfg::Scalar;

std::vector<Scalar> random_values(nfg::random::Rng& rng, size_t n) {
  std::vector<Scalar> v(n);
  for (auto& z : v) z = nfg::random::random_scalar(rng);
  return v;
}

// Two rank-k binary tensors contracted on half their ports. The serial
// reference visits every (f, g) entry pair, so k stays small.
struct ContractCase {
  nfg::kernels::PairContraction spec;
  std::vector<Scalar> f, g;
  explicit ContractCase(size_t k) {
    nfg::random::Rng rng(7);
    spec.f_shape.assign(k, 2);
    spec.g_shape.assign(k, 2);
    for (size_t p = 0; p < k / 2; ++p) spec.pairing.emplace_back(p, p);
    f = random_values(rng, size_t{1} << k);
    g = random_values(rng, size_t{1} << k);
  }
};

void BM_ContractSerial(benchmark::State& st) {
  const ContractCase c(static_cast<size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(nfg::kernels::serial::contract(c.spec, c.f, c.g));
}
void BM_ContractParallel(benchmark::State& st) {
  const ContractCase c(static_cast<size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(nfg::kernels::contract(c.spec, c.f, c.g));
}
BENCHMARK(BM_ContractSerial)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ContractParallel)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);

// Closed binary ring of n vertices: brute force touches 2^n configurations.
nfg::NFG ring(size_t n) {
  nfg::random::Rng rng(11);
  const auto z2 = nfg::Alphabet::parse("Z2");
  std::vector<nfg::Vertex> vs;
  std::vector<nfg::InternalEdge> ie;
  for (size_t i = 0; i < n; ++i) vs.push_back({"v" + std::to_string(i), nfg::random::random_function(rng, {z2, z2})});
  for (size_t i = 0; i < n; ++i) ie.push_back({{"v" + std::to_string(i), 1}, {"v" + std::to_string((i + 1) % n), 0}});
  return nfg::NFG::build(std::move(vs), std::move(ie), {});
}

void BM_BruteSerial(benchmark::State& st) {
  const auto g = ring(static_cast<size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(nfg::eval_brute_serial(g));
}
void BM_BruteParallel(benchmark::State& st) {
  const auto g = ring(static_cast<size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(nfg::eval_brute(g));
}
void BM_Eliminate(benchmark::State& st) {
  const auto g = ring(static_cast<size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(nfg::eval_eliminate(g, nfg::default_elimination_order(g)));
}
BENCHMARK(BM_BruteSerial)->DenseRange(12, 20, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BruteParallel)->DenseRange(12, 20, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Eliminate)->DenseRange(12, 20, 4)->Unit(benchmark::kMicrosecond);

nfg::WeightedGraph dense_graph(size_t n) {
  nfg::random::Rng rng(13);
  std::vector<nfg::WeightedEdge> e;
  for (size_t u = 0; u < n; ++u)
    for (size_t v = u + 1; v < n; ++v)
      if (std::bernoulli_distribution(0.5)(rng)) e.push_back({u, v, nfg::random::random_scalar(rng)});
  return nfg::WeightedGraph(n, std::move(e));
}

void BM_PerfMatchSerial(benchmark::State& st) {
  const auto h = dense_graph(static_cast<size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(nfg::perfmatch_brute_serial(h));
}
void BM_PerfMatchParallel(benchmark::State& st) {
  const auto h = dense_graph(static_cast<size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(nfg::perfmatch_brute(h));
}
BENCHMARK(BM_PerfMatchSerial)->DenseRange(14, 22, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PerfMatchParallel)->DenseRange(14, 22, 4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
