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

#include "nfg/random.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "nfg/error.hpp"

namespace nfg::random {
namespace {

size_t uniform(Rng& rng, size_t lo, size_t hi) {
  return std::uniform_int_distribution<size_t>(lo, hi)(rng);
}

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

std::vector<Alphabet> default_pool() {
  return {Alphabet::plain(2), Alphabet::plain(3), Alphabet::plain(4),
          Alphabet::parse("Z2"), Alphabet::parse("Z3"), Alphabet::parse("Z4")};
}

// Largest local function random_nfg will allocate.
constexpr size_t kMaxFunctionSize = size_t{1} << 16;

}  // namespace

Scalar random_scalar(Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  const double re = n(rng);
  const double im = n(rng);
  return {re, im};
}

LocalFunction random_function(Rng& rng, std::vector<Alphabet> ports) {
  std::vector<Scalar> v(product_size(ports));
  for (auto& z : v) z = random_scalar(rng);
  return LocalFunction(std::move(ports), std::move(v));
}

NFG random_nfg(Rng& rng, const NfgShape& shape) {
  const auto pool = shape.alphabets.empty() ? default_pool() : shape.alphabets;
  for (;;) {
    const size_t nv = uniform(rng, 1, shape.max_vertices);
    const size_t ne = uniform(rng, 1, shape.max_edges);
    std::vector<std::vector<Alphabet>> ports(nv);
    struct Pending {
      size_t u, pu;
      bool dangling;
      size_t v, pv;
    };
    std::vector<Pending> pending;
    for (size_t k = 0; k < ne; ++k) {
      const Alphabet a = pool[uniform(rng, 0, pool.size() - 1)];
      const size_t u = uniform(rng, 0, nv - 1);
      if (!shape.closed && coin(rng, shape.dangling_probability)) {
        pending.push_back({u, ports[u].size(), true, 0, 0});
        ports[u].push_back(a);
        continue;
      }
      size_t v = uniform(rng, 0, nv - 1);
      while (!shape.self_loops && nv > 1 && v == u) v = uniform(rng, 0, nv - 1);
      const size_t pu = ports[u].size();
      ports[u].push_back(a);
      const size_t pv = ports[v].size();
      ports[v].push_back(a);
      pending.push_back({u, pu, false, v, pv});
    }
    bool too_big = false;
    for (const auto& p : ports) too_big |= product_size(p) > kMaxFunctionSize;
    if (too_big) continue;

    std::vector<Vertex> vertices;
    for (size_t i = 0; i < nv; ++i) vertices.push_back({"v" + std::to_string(i), random_function(rng, ports[i])});
    std::vector<InternalEdge> internal;
    std::vector<DanglingEdge> dangling;
    for (const auto& p : pending) {
      const PortRef a{"v" + std::to_string(p.u), p.pu};
      if (p.dangling) {
        dangling.push_back({a, "x" + std::to_string(dangling.size())});
      } else {
        internal.push_back({a, {"v" + std::to_string(p.v), p.pv}});
      }
    }
    return NFG::build(std::move(vertices), std::move(internal), std::move(dangling));
  }
}

Transformer random_transformer(Rng& rng, const Alphabet& domain, const Alphabet& codomain, double max_condition) {
  const size_t n = domain.size();
  for (;;) {
    std::vector<Scalar> v(n * n);
    for (auto& z : v) z = random_scalar(rng);
    try {
      Transformer t(domain, codomain, std::move(v));
      if (t.condition_number() <= max_condition) return t;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kSingularMatrix) throw;
    }
  }
}

TransformerAssignment random_assignment(Rng& rng, const NFG& g, double max_condition) {
  TransformerAssignment a;
  for (size_t i = 0; i < g.internal_edges().size(); ++i) {
    const auto& e = g.internal_edges()[i];
    const Alphabet& al = g.alphabet(EdgeId::internal(i));
    Transformer phi = random_transformer(rng, al, al, max_condition);
    a.emplace(e.b, invert(phi));
    a.emplace(e.a, std::move(phi));
  }
  for (size_t j = 0; j < g.dangling_edges().size(); ++j) {
    const Alphabet& al = g.alphabet(EdgeId::dangling(j));
    a.emplace(g.dangling_edges()[j].at, random_transformer(rng, al, al, max_condition));
  }
  return a;
}

MarkedFactorGraph random_marked(Rng& rng, size_t max_factors, size_t max_variables) {
  const Alphabet z2 = Alphabet::parse("Z2");
  const size_t nvar = uniform(rng, 1, max_variables);
  const size_t nf = uniform(rng, 1, max_factors);
  std::vector<size_t> names(nvar);
  std::iota(names.begin(), names.end(), size_t{0});
  std::vector<std::vector<size_t>> scopes;
  std::vector<size_t> degree(nvar, 0);
  for (size_t f = 0; f < nf; ++f) {
    std::shuffle(names.begin(), names.end(), rng);
    const size_t arity = uniform(rng, 1, std::min<size_t>(4, nvar));
    scopes.emplace_back(names.begin(), names.begin() + static_cast<long>(arity));
    for (size_t k = 0; k < arity; ++k) ++degree[scopes.back()[k]];
  }
  std::vector<MarkedVariable> vars;
  for (size_t x = 0; x < nvar; ++x) {
    if (degree[x] == 0) continue;
    Mark m = coin(rng, 0.5) ? Mark::kExternal : Mark::kInternal;
    if (degree[x] == 1) m = Mark::kExternal;
    vars.push_back({"x" + std::to_string(x), z2, m});
  }
  std::vector<MarkedFactor> factors;
  for (size_t f = 0; f < nf; ++f) {
    std::vector<std::string> vs;
    for (size_t x : scopes[f]) vs.push_back("x" + std::to_string(x));
    factors.push_back({"f" + std::to_string(f), random_function(rng, std::vector<Alphabet>(vs.size(), z2)), vs});
  }
  return MarkedFactorGraph::build(std::move(vars), std::move(factors));
}

GateAssembly random_assembly(Rng& rng, size_t max_gate_vertices, size_t max_external) {
  const size_t k = uniform(rng, 1, 3);
  std::vector<size_t> ext(k, 0);
  GateAssembly out;
  if (k > 1) {
    const size_t m = uniform(rng, 0, k * max_external / 2);
    for (size_t c = 0; c < m; ++c) {
      std::vector<size_t> open;
      for (size_t i = 0; i < k; ++i)
        if (ext[i] < max_external) open.push_back(i);
      if (open.size() < 2) break;
      std::shuffle(open.begin(), open.end(), rng);
      const size_t a = open[0];
      const size_t b = open[1];
      out.connections.push_back({a, ext[a]++, b, ext[b]++});
    }
  }
  for (size_t i = 0; i < k; ++i) {
    const size_t nv = uniform(rng, std::max<size_t>(ext[i], 1), std::max(max_gate_vertices, ext[i]));
    std::vector<WeightedEdge> edges;
    for (size_t u = 0; u < nv; ++u)
      for (size_t v = u + 1; v < nv; ++v)
        if (coin(rng, 0.6)) edges.push_back({u, v, random_scalar(rng)});
    std::vector<size_t> verts(nv);
    std::iota(verts.begin(), verts.end(), size_t{0});
    std::shuffle(verts.begin(), verts.end(), rng);
    verts.resize(ext[i]);
    out.gates.push_back({WeightedGraph(nv, std::move(edges)), std::move(verts)});
  }
  return out;
}

PlanarInstance random_planar(Rng& rng, size_t max_vertices) {
  const size_t rows = uniform(rng, 1, std::min<size_t>(4, max_vertices));
  const size_t cols = uniform(rng, 1, std::max<size_t>(1, max_vertices / rows));
  const size_t n = rows * cols;
  auto id = [&](size_t r, size_t c) { return r * cols + c; };
  std::vector<std::pair<size_t, size_t>> cand;
  for (size_t r = 0; r < rows; ++r) {
    for (size_t c = 0; c < cols; ++c) {
      if (c + 1 < cols) cand.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < rows) cand.emplace_back(id(r, c), id(r + 1, c));
      if (r + 1 < rows && c + 1 < cols) {
        if (coin(rng, 0.5)) {
          cand.emplace_back(id(r, c), id(r + 1, c + 1));
        } else {
          cand.emplace_back(id(r, c + 1), id(r + 1, c));
        }
      }
    }
  }
  std::vector<WeightedEdge> edges;
  for (const auto& [u, v] : cand)
    if (coin(rng, 0.8)) edges.push_back({u, v, random_scalar(rng)});
  WeightedGraph g(n, std::move(edges));

  PlanarEmbedding emb;
  emb.rotation.resize(n);
  for (size_t v = 0; v < n; ++v) {
    auto inc = g.incident(v);
    auto angle = [&](size_t e) {
      const auto& ed = g.edges()[e];
      const size_t w = ed.u == v ? ed.v : ed.u;
      const double dx = static_cast<double>(w % cols) - static_cast<double>(v % cols);
      const double dy = static_cast<double>(w / cols) - static_cast<double>(v / cols);
      return std::atan2(dy, dx);
    };
    std::sort(inc.begin(), inc.end(), [&](size_t a, size_t b) { return angle(a) < angle(b); });
    emb.rotation[v] = std::move(inc);
  }
  return {std::move(g), std::move(emb)};
}

Eigen::MatrixXcd random_skew(Rng& rng, Eigen::Index n) {
  Eigen::MatrixXcd b(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) b(i, j) = random_scalar(rng);
  return b - b.transpose();
}

}  // namespace nfg::random
