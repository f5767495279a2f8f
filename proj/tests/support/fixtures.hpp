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

#ifndef NFG_TESTS_FIXTURES_HPP_
#define NFG_TESTS_FIXTURES_HPP_

// Small hand-built instances and rewrite drivers shared by the unit tests
// and the acceptance suite.

#include <string>
#include <vector>

#include "nfg/holo.hpp"
#include "nfg/random.hpp"
#include "nfg/rewrite.hpp"

namespace nfg::fixture {

inline const Alphabet& z2() {
  static const Alphabet a = Alphabet::parse("Z2");
  return a;
}

// f = (1, 1), g = (1, 2) on one Z2 edge; Z = 3.
inline NFG closed_pair() {
  return NFG::build({{"f", LocalFunction({z2()}, {1.0, 1.0})}, {"g", LocalFunction({z2()}, {1.0, 2.0})}},
                    {{{"f", 0}, {"g", 0}}}, {});
}

// Two-vertex fragment realizing f: A = Phi on (x0, y), B = Phi^{-1} applied
// to port 0 of f. Dangling edge j stands for port j of f.
inline NFG split_fragment(random::Rng& rng, const LocalFunction& f) {
  const Alphabet& x0 = f.port(0);
  const Transformer phi = random::random_transformer(rng, x0, x0);
  // invert(phi)(x, y) = Phi^{-1}(y, x); pairing its port 0 with f's port 0
  // leaves (y, rest).
  const LocalFunction b = contract_pair(invert(phi).as_function(), f, std::vector<PortPair>{{0, 0}});
  std::vector<DanglingEdge> dangling{{{"A", 0}, "d0"}};
  for (size_t p = 1; p < f.arity(); ++p) dangling.push_back({{"B", p}, "d" + std::to_string(p)});
  return NFG::build({{"A", phi.as_function()}, {"B", b}}, {{{"A", 1}, {"B", 0}}}, std::move(dangling));
}

// A random dual pair over x: Phi and (Phi^{-1})^T, coupled at port 1.
inline DualPair random_dual_pair(random::Rng& rng, const Alphabet& x) {
  const Transformer phi = random::random_transformer(rng, x, x);
  return {phi.as_function(), invert(phi).as_function(), 1, 1};
}

inline EdgeId random_edge(random::Rng& rng, const NFG& g) {
  const size_t ni = g.internal_edges().size();
  const size_t n = ni + g.dangling_edges().size();
  const size_t k = std::uniform_int_distribution<size_t>(0, n - 1)(rng);
  return k < ni ? EdgeId::internal(k) : EdgeId::dangling(k - ni);
}

inline bool has_edge(const NFG& g) { return !g.internal_edges().empty() || !g.dangling_edges().empty(); }

// First vertex with at least one port, or "" if none.
inline std::string vertex_with_ports(const NFG& g) {
  for (const auto& v : g.vertices())
    if (v.function.arity() > 0) return v.id;
  return "";
}

}  // namespace nfg::fixture

#endif  // NFG_TESTS_FIXTURES_HPP_
