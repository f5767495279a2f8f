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

#ifndef NFG_FKT_HPP_
#define NFG_FKT_HPP_

#include <vector>

#include <Eigen/Dense>

#include "nfg/perfmatch.hpp"

namespace nfg {

// Faces of an embedded graph, each as a cyclic list of darts. Dart 2e runs
// edges[e].u -> edges[e].v, dart 2e+1 the other way. Leaving along dart d
// into vertex w, the walk continues with the edge after d's edge in w's
// rotation.
struct FaceStructure {
  std::vector<std::vector<size_t>> faces;
  std::vector<size_t> face_of_dart;
};

// Validates the rotation system (each vertex lists exactly its incident edges
// once) and Euler's formula per connected component. Throws
// kInvalidEmbedding.
FaceStructure trace_faces(const WeightedGraph& h, const PlanarEmbedding& emb);

// Pfaffian orientation: orientation[e] is true when edge e points u -> v.
// Every face except the first face of each component gets an odd number of
// darts agreeing with the orientation.
std::vector<bool> pfaffian_orientation(const WeightedGraph& h, const PlanarEmbedding& emb);

// A[u][v] = w(e), A[v][u] = -w(e) for e oriented u -> v.
Eigen::MatrixXcd oriented_skew_matrix(const WeightedGraph& h, const std::vector<bool>& orientation,
                                      bool unit_weights = false);

// PerfMatch through a Pfaffian of the oriented skew adjacency matrix,
// component by component. The global sign is taken from the same Pfaffian
// with unit weights, which equals +-(number of perfect matchings).
Scalar fkt_perfmatch(const WeightedGraph& h, const PlanarEmbedding& emb);

}  // namespace nfg

#endif  // NFG_FKT_HPP_
