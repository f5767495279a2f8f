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

#include "nfg/duality.hpp"

#include "nfg/error.hpp"
#include "nfg/fourier.hpp"

namespace nfg {

NFG dualize(const NFG& g) {
  for (size_t i = 0; i < g.internal_edges().size(); ++i) {
    const Alphabet& a = g.alphabet(EdgeId::internal(i));
    if (!a.is_group()) {
      const auto& e = g.internal_edges()[i];
      throw Error(ErrorCode::kNotGroupAlphabet, "on edge " + to_string(e.a) + " -- " + to_string(e.b) +
                                                    " (alphabet " + a.to_string() + ")");
    }
  }
  for (size_t j = 0; j < g.dangling_edges().size(); ++j) {
    const Alphabet& a = g.alphabet(EdgeId::dangling(j));
    if (!a.is_group()) {
      throw Error(ErrorCode::kNotGroupAlphabet,
                  "on edge " + g.dangling_edges()[j].label + " (alphabet " + a.to_string() + ")");
    }
  }

  const auto& vs = g.vertices();
  std::vector<Vertex> vertices(vs.size());
  const long n = static_cast<long>(vs.size());
#pragma omp parallel for schedule(dynamic)
  for (long k = 0; k < n; ++k) {
    const Vertex& v = vs[static_cast<size_t>(k)];
    vertices[static_cast<size_t>(k)] = Vertex{v.id, fourier(v.function, FourierDirection::kForward)};
  }

  std::vector<InternalEdge> internal;
  for (size_t i = 0; i < g.internal_edges().size(); ++i) {
    const auto& e = g.internal_edges()[i];
    std::string id = "plus" + std::to_string(i);
    while (g.has_vertex(id)) id += "'";
    vertices.push_back({id, delta_plus(g.alphabet(EdgeId::internal(i)))});
    const bool a_first = e.a <= e.b;
    internal.push_back({a_first ? e.a : e.b, {id, 0}});
    internal.push_back({{id, 1}, a_first ? e.b : e.a});
  }
  return NFG::build(std::move(vertices), std::move(internal), g.dangling_edges());
}

DualityReport verify_duality(const NFG& g, EvalMode mode, Tolerance tol, const EvalOptions& opts) {
  const NFG dual = dualize(g);
  DualityReport r;
  r.scale = g.internal_configuration_count();
  r.dual_exterior = eval_exterior(dual, mode, opts);
  r.expected = scale(fourier(eval_exterior(g, mode, opts), FourierDirection::kForward), r.scale);
  r.max_deviation = relative_deviation(r.dual_exterior->values(), r.expected->values());
  r.ok = approx_equal(r.dual_exterior->values(), r.expected->values(), tol);
  return r;
}

}  // namespace nfg
