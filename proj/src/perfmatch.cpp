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

#include "nfg/perfmatch.hpp"

#include <bit>
#include <cstdio>
#include <set>
#include <utility>

#include "nfg/error.hpp"
#include "nfg/evaluate.hpp"
#include "nfg/fkt.hpp"

namespace nfg {

WeightedGraph::WeightedGraph(size_t vertex_count, std::vector<WeightedEdge> edges)
    : n_(vertex_count), edges_(std::move(edges)) {
  std::set<std::pair<size_t, size_t>> seen;
  for (size_t i = 0; i < edges_.size(); ++i) {
    const auto& e = edges_[i];
    const std::string where = "edge " + std::to_string(i);
    if (e.u >= n_ || e.v >= n_) throw Error(ErrorCode::kInvalidGraph, where + " leaves the vertex range");
    if (e.u == e.v) throw Error(ErrorCode::kInvalidGraph, where + " is a self-loop");
    if (!seen.emplace(std::min(e.u, e.v), std::max(e.u, e.v)).second) {
      throw Error(ErrorCode::kInvalidGraph, where + " repeats the pair (" + std::to_string(e.u) + ", " +
                                                std::to_string(e.v) + ")");
    }
    if (!is_finite(e.w)) throw Error(ErrorCode::kInvalidGraph, where + " has a non-finite weight");
  }
}

std::vector<size_t> WeightedGraph::incident(size_t v) const {
  std::vector<size_t> out;
  for (size_t i = 0; i < edges_.size(); ++i)
    if (edges_[i].u == v || edges_[i].v == v) out.push_back(i);
  return out;
}

namespace {

std::string magnitude_string(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

struct Adjacency {
  size_t n = 0;
  uint32_t full = 0;
  std::vector<Scalar> w;         // n x n
  std::vector<uint32_t> nbr;     // neighbour bitmasks
};

Adjacency adjacency(const WeightedGraph& h, size_t cap) {
  if (h.vertex_count() > cap || h.vertex_count() > 30) {
    throw Error(ErrorCode::kCapExceeded, "PerfMatch enumeration over " + std::to_string(h.vertex_count()) +
                                             " vertices exceeds cap " + std::to_string(cap));
  }
  Adjacency a;
  a.n = h.vertex_count();
  a.full = a.n == 0 ? 0u : static_cast<uint32_t>((uint64_t{1} << a.n) - 1);
  a.w.assign(a.n * a.n, 0.0);
  a.nbr.assign(a.n, 0);
  for (const auto& e : h.edges()) {
    a.w[e.u * a.n + e.v] = a.w[e.v * a.n + e.u] = e.w;
    a.nbr[e.u] |= uint32_t{1} << e.v;
    a.nbr[e.v] |= uint32_t{1} << e.u;
  }
  return a;
}

// Matches the lowest free vertex with each free neighbour, recursively.
Scalar match_rec(const Adjacency& a, uint32_t used) {
  if (used == a.full) return 1.0;
  const uint32_t free = a.full & ~used;
  if (std::popcount(free) % 2) return 0.0;
  const int i = std::countr_zero(free);
  uint32_t cand = a.nbr[static_cast<size_t>(i)] & free;
  Scalar s = 0.0;
  while (cand) {
    const int j = std::countr_zero(cand);
    cand &= cand - 1;
    s += a.w[static_cast<size_t>(i) * a.n + static_cast<size_t>(j)] *
         match_rec(a, used | (uint32_t{1} << i) | (uint32_t{1} << j));
  }
  return s;
}

// Expands the first few recursion levels into independent jobs, evaluates
// them in parallel and adds the results in job order.
Scalar match_parallel(const Adjacency& a, uint32_t used) {
  std::vector<std::pair<uint32_t, Scalar>> jobs{{used, 1.0}};
  for (int depth = 0; depth < 3; ++depth) {
    std::vector<std::pair<uint32_t, Scalar>> next;
    for (const auto& [u, c] : jobs) {
      const uint32_t free = a.full & ~u;
      if (u == a.full || std::popcount(free) % 2) {
        next.emplace_back(u, c);
        continue;
      }
      const int i = std::countr_zero(free);
      uint32_t cand = a.nbr[static_cast<size_t>(i)] & free;
      while (cand) {
        const int j = std::countr_zero(cand);
        cand &= cand - 1;
        next.emplace_back(u | (uint32_t{1} << i) | (uint32_t{1} << j),
                          c * a.w[static_cast<size_t>(i) * a.n + static_cast<size_t>(j)]);
      }
    }
    jobs = std::move(next);
  }
  std::vector<Scalar> part(jobs.size());
  const long nj = static_cast<long>(jobs.size());
#pragma omp parallel for schedule(dynamic)
  for (long k = 0; k < nj; ++k) {
    const auto& [u, c] = jobs[static_cast<size_t>(k)];
    part[static_cast<size_t>(k)] = c * match_rec(a, u);
  }
  Scalar s = 0.0;
  for (const auto& p : part) s += p;
  return s;
}

}  // namespace

Scalar perfmatch_brute(const WeightedGraph& h, size_t cap) {
  const Adjacency a = adjacency(h, cap);
  if (a.n % 2) return 0.0;
  return match_parallel(a, 0);
}

Scalar perfmatch_brute_serial(const WeightedGraph& h, size_t cap) {
  const Adjacency a = adjacency(h, cap);
  if (a.n % 2) return 0.0;
  return match_rec(a, 0);
}

LocalFunction signature(const Matchgate& m, size_t cap) {
  const Adjacency a = adjacency(m.graph, cap);
  std::set<size_t> distinct;
  for (size_t v : m.external) {
    if (v >= a.n) throw Error(ErrorCode::kInvalidGraph, "external vertex " + std::to_string(v) + " out of range");
    if (!distinct.insert(v).second) {
      throw Error(ErrorCode::kInvalidGraph, "external vertex " + std::to_string(v) + " listed twice");
    }
  }
  const size_t k = m.external.size();
  std::vector<Alphabet> ports(k, Alphabet::plain(2));
  std::vector<Scalar> values(size_t{1} << k);
  const long nx = static_cast<long>(values.size());
#pragma omp parallel for schedule(dynamic)
  for (long x = 0; x < nx; ++x) {
    uint32_t deleted = 0;
    for (size_t j = 0; j < k; ++j) {
      if ((static_cast<size_t>(x) >> (k - 1 - j)) & 1) deleted |= uint32_t{1} << m.external[j];
    }
    values[static_cast<size_t>(x)] = match_rec(a, deleted);
  }
  return LocalFunction(std::move(ports), std::move(values));
}

Assembly assemble(const std::vector<Matchgate>& gates, const std::vector<GateConnection>& connections,
                  size_t cap) {
  std::vector<std::vector<int>> uses(gates.size());
  for (size_t i = 0; i < gates.size(); ++i) uses[i].assign(gates[i].external.size(), 0);
  for (size_t c = 0; c < connections.size(); ++c) {
    const auto& k = connections[c];
    const std::string where = "connection " + std::to_string(c);
    if (k.gate_a >= gates.size() || k.gate_b >= gates.size()) {
      throw Error(ErrorCode::kInvalidConnection, where + " names a missing gate");
    }
    if (k.gate_a == k.gate_b) throw Error(ErrorCode::kInvalidConnection, where + " joins a gate to itself");
    if (k.ext_a >= uses[k.gate_a].size() || k.ext_b >= uses[k.gate_b].size()) {
      throw Error(ErrorCode::kInvalidConnection, where + " names a missing external vertex");
    }
    ++uses[k.gate_a][k.ext_a];
    ++uses[k.gate_b][k.ext_b];
  }
  for (size_t i = 0; i < gates.size(); ++i) {
    for (size_t j = 0; j < uses[i].size(); ++j) {
      if (uses[i][j] != 1) {
        throw Error(ErrorCode::kInvalidConnection, "external vertex " + std::to_string(j) + " of gate " +
                                                       std::to_string(i) + " is used " + std::to_string(uses[i][j]) +
                                                       " times");
      }
    }
  }

  Assembly out;
  std::vector<WeightedEdge> edges;
  size_t n = 0;
  for (const auto& g : gates) {
    out.offsets.push_back(n);
    for (const auto& e : g.graph.edges()) edges.push_back({e.u + n, e.v + n, e.w});
    n += g.graph.vertex_count();
  }
  for (const auto& k : connections) {
    edges.push_back({out.offsets[k.gate_a] + gates[k.gate_a].external[k.ext_a],
                     out.offsets[k.gate_b] + gates[k.gate_b].external[k.ext_b], 1.0});
  }
  out.graph = WeightedGraph(n, std::move(edges));

  std::vector<Vertex> vertices;
  for (size_t i = 0; i < gates.size(); ++i) vertices.push_back({"g" + std::to_string(i), signature(gates[i], cap)});
  std::vector<InternalEdge> internal;
  for (const auto& k : connections) {
    internal.push_back({{"g" + std::to_string(k.gate_a), k.ext_a}, {"g" + std::to_string(k.gate_b), k.ext_b}});
  }
  out.nfg = NFG::build(std::move(vertices), std::move(internal), {});
  return out;
}

RewriteReport verify_decomposition(const std::vector<Matchgate>& gates,
                                   const std::vector<GateConnection>& connections, Tolerance tol) {
  const Assembly asmb = assemble(gates, connections);
  RewriteReport r;
  r.before = LocalFunction::scalar(perfmatch_brute(asmb.graph));
  r.after = eval_exterior(asmb.nfg);
  r.max_deviation = relative_deviation(r.after->values(), r.before->values());
  r.preserved = approx_equal(r.after->values(), r.before->values(), tol);
  return r;
}

ReductionReport holographic_reduce(const NFG& g, const TransformerAssignment& a,
                                   const std::map<std::string, Matchgate>& gate_map,
                                   const std::optional<PlanarEmbedding>& embedding, Tolerance tol) {
  if (!g.dangling_edges().empty()) {
    throw Error(ErrorCode::kOpenNfg, std::to_string(g.dangling_edges().size()) + " dangling edges");
  }
  for (size_t i = 0; i < g.internal_edges().size(); ++i) {
    const Alphabet& al = g.alphabet(EdgeId::internal(i));
    if (al.size() != 2) {
      throw Error(ErrorCode::kNonBinaryAlphabet, "internal edge " + std::to_string(i) + " has alphabet " + al.to_string());
    }
  }
  const NFG gh = holographic_transform(g, a, tol);

  std::vector<Matchgate> gates;
  for (const auto& v : gh.vertices()) {
    auto it = gate_map.find(v.id);
    if (it == gate_map.end()) throw Error(ErrorCode::kMissingAssignment, "no matchgate for vertex " + v.id);
    const Matchgate& m = it->second;
    if (m.external.size() != v.function.arity()) {
      throw Error(ErrorCode::kSignatureMismatch, "vertex " + v.id + ": gate has " + std::to_string(m.external.size()) +
                                                     " external vertices, function has " +
                                                     std::to_string(v.function.arity()) + " ports");
    }
    const LocalFunction mu = signature(m);
    if (!approx_equal(mu.values(), v.function.values(), tol)) {
      throw Error(ErrorCode::kSignatureMismatch,
                  "vertex " + v.id + ": deviation " + magnitude_string(relative_deviation(mu.values(), v.function.values())));
    }
    gates.push_back(m);
  }
  std::vector<GateConnection> connections;
  for (const auto& e : gh.internal_edges()) {
    if (e.a.vertex == e.b.vertex) {
      throw Error(ErrorCode::kInvalidConnection, "self-loop at vertex " + e.a.vertex + " cannot join two gates");
    }
    connections.push_back({gh.vertex_index(e.a.vertex), e.a.port, gh.vertex_index(e.b.vertex), e.b.port});
  }

  ReductionReport r;
  r.assembly = assemble(gates, connections);
  r.used_fkt = embedding.has_value();
  r.perfmatch = embedding ? fkt_perfmatch(r.assembly.graph, *embedding) : perfmatch_brute(r.assembly.graph);
  r.exterior = eval_exterior(g).value();
  const Scalar pm[1] = {r.perfmatch};
  const Scalar ex[1] = {r.exterior};
  r.deviation = relative_deviation(pm, ex);
  r.agree = approx_equal(r.perfmatch, r.exterior, tol);
  return r;
}

}  // namespace nfg
