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

#ifndef NFG_RANDOM_HPP_
#define NFG_RANDOM_HPP_

#include <random>
#include <vector>

#include <Eigen/Dense>

#include "nfg/fkt.hpp"
#include "nfg/holo.hpp"
#include "nfg/marked.hpp"
#include "nfg/perfmatch.hpp"

// Seeded instance generators shared by the tests, the acceptance suite, the
// benchmarks and the CLI self-test modes. Everything draws from a
// std::mt19937_64, so a seed fixes the instance.
namespace nfg::random {

using Rng = std::mt19937_64;

struct NfgShape {
  size_t max_vertices = 6;
  size_t max_edges = 8;
  std::vector<Alphabet> alphabets;  // pool; empty means plain 2..4 and Z2..Z4
  double dangling_probability = 0.3;
  bool closed = false;              // no dangling edges at all
  bool self_loops = true;
};

Scalar random_scalar(Rng& rng);
LocalFunction random_function(Rng& rng, std::vector<Alphabet> ports);

// 1..max_vertices vertices, 1..max_edges edges; endpoints drawn uniformly, so
// self-loops, multi-edges and arity-0 vertices all occur.
NFG random_nfg(Rng& rng, const NfgShape& shape = {});

// Complex Gaussian matrix, redrawn until its condition number is below
// max_condition.
Transformer random_transformer(Rng& rng, const Alphabet& domain, const Alphabet& codomain,
                               double max_condition = 1e3);
// Random Phi at the first end of every internal edge and its inverse at the
// second; a random transformer on every dangling edge. Codomains equal the
// domains.
TransformerAssignment random_assignment(Rng& rng, const NFG& g, double max_condition = 1e3);

// Up to max_factors factors over up to max_variables Z2 variables. Internal
// variables of degree 1 are re-marked external.
MarkedFactorGraph random_marked(Rng& rng, size_t max_factors = 4, size_t max_variables = 6);

struct GateAssembly {
  std::vector<Matchgate> gates;
  std::vector<GateConnection> connections;
};

// 1..3 gates of at most max_gate_vertices vertices and at most max_external
// external vertices each, every external vertex joined to a different gate.
GateAssembly random_assembly(Rng& rng, size_t max_gate_vertices = 6, size_t max_external = 3);

struct PlanarInstance {
  WeightedGraph graph;
  PlanarEmbedding embedding;
};

// Subgraph of a grid with one diagonal per cell, straight-line embedded and
// rotations sorted by angle. At most max_vertices vertices.
PlanarInstance random_planar(Rng& rng, size_t max_vertices = 12);

Eigen::MatrixXcd random_skew(Rng& rng, Eigen::Index n);

}  // namespace nfg::random

#endif  // NFG_RANDOM_HPP_
