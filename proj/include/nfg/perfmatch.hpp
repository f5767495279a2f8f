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

#ifndef NFG_PERFMATCH_HPP_
#define NFG_PERFMATCH_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nfg/graph.hpp"
#include "nfg/holo.hpp"
#include "nfg/rewrite.hpp"

namespace nfg {

struct WeightedEdge {
  size_t u = 0;
  size_t v = 0;
  Scalar w{1.0, 0.0};
};

// Simple undirected graph with complex edge weights.
class WeightedGraph {
 public:
  WeightedGraph() = default;
  // Throws kInvalidGraph on self-loops, repeated pairs, out-of-range vertices
  // or non-finite weights.
  WeightedGraph(size_t vertex_count, std::vector<WeightedEdge> edges);

  size_t vertex_count() const noexcept { return n_; }
  const std::vector<WeightedEdge>& edges() const noexcept { return edges_; }
  // Edges incident to v, by index.
  std::vector<size_t> incident(size_t v) const;

 private:
  size_t n_ = 0;
  std::vector<WeightedEdge> edges_;
};

// Rotation system: for every vertex, its incident edge indices in cyclic
// (counterclockwise) order.
struct PlanarEmbedding {
  std::vector<std::vector<size_t>> rotation;
};

struct Matchgate {
  WeightedGraph graph;
  std::vector<size_t> external;  // distinct vertices, declared order
};

inline constexpr size_t kPerfMatchCap = 24;

// Sum over perfect matchings of the product of edge weights; 1 for the empty
// graph, 0 for an odd vertex count. Throws kCapExceeded above `cap` vertices.
Scalar perfmatch_brute(const WeightedGraph& h, size_t cap = kPerfMatchCap);
// Single-threaded recursion, kept as the reference for the parallel one.
Scalar perfmatch_brute_serial(const WeightedGraph& h, size_t cap = kPerfMatchCap);

// mu(x) = PerfMatch of the gate with external vertex j removed iff x_j = 1.
// One plain binary port per external vertex, first external vertex slowest.
LocalFunction signature(const Matchgate& m, size_t cap = kPerfMatchCap);

// Joins external vertex ext_a of gate_a to external vertex ext_b of gate_b.
struct GateConnection {
  size_t gate_a = 0;
  size_t ext_a = 0;
  size_t gate_b = 0;
  size_t ext_b = 0;
};

struct Assembly {
  // Gate edges in gate order (gate i's vertices shifted by offsets[i]), then
  // one weight-1 edge per connection in connection order.
  WeightedGraph graph;
  std::vector<size_t> offsets;
  // Closed NFG: vertex "g<i>" holds signature(gates[i]), one internal edge per
  // connection.
  NFG nfg;
};

// Throws kInvalidConnection unless every external vertex is used by exactly
// one connection between two different gates.
Assembly assemble(const std::vector<Matchgate>& gates, const std::vector<GateConnection>& connections,
                  size_t cap = kPerfMatchCap);

// before = PerfMatch(H) by enumeration, after = exterior of the signature NFG.
RewriteReport verify_decomposition(const std::vector<Matchgate>& gates,
                                   const std::vector<GateConnection>& connections,
                                   Tolerance tol = kDefaultTolerance);

struct ReductionReport {
  Scalar perfmatch;     // PerfMatch of the assembled graph
  Scalar exterior;      // Z_G evaluated directly
  double deviation = 0.0;
  bool agree = true;
  bool used_fkt = false;
  Assembly assembly;
};

// Transforms a closed binary NFG, checks every F_v against the signature of
// gate_map[v], assembles the gates along the NFG's edges and compares
// PerfMatch(H) with Z_G. The embedding, when given, is a rotation system for
// the assembled graph and selects the FKT path.
ReductionReport holographic_reduce(const NFG& g, const TransformerAssignment& a,
                                   const std::map<std::string, Matchgate>& gate_map,
                                   const std::optional<PlanarEmbedding>& embedding = std::nullopt,
                                   Tolerance tol = kDefaultTolerance);

}  // namespace nfg

#endif  // NFG_PERFMATCH_HPP_
