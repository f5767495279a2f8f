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

#ifndef NFG_REWRITE_HPP_
#define NFG_REWRITE_HPP_

#include <optional>
#include <string>
#include <vector>

#include "nfg/evaluate.hpp"
#include "nfg/graph.hpp"

namespace nfg {

// Exterior-function-preserving graph procedures. None of them mutate their
// input; verification (recomputing both exteriors) is a separate, opt-in
// call because it is exponential in the graph size.

struct RewriteReport {
  std::optional<LocalFunction> before;
  std::optional<LocalFunction> after;
  double max_deviation = 0.0;
  bool preserved = true;
};

// Evaluates both NFGs and compares the exteriors. Differing port lists count
// as not preserved (deviation = infinity).
RewriteReport compare_exteriors(const NFG& before, const NFG& after,
                                EvalMode mode = EvalMode::kEliminate,
                                Tolerance tol = kDefaultTolerance,
                                const EvalOptions& opts = {});

// Replaces the vertices in `group` by a single vertex holding the exterior
// function of the sub-NFG they induce. Edges leaving the group become the new
// vertex's ports, ordered by (vertex order, port). The new vertex takes the
// position of the first grouped vertex.
NFG vertex_group(const NFG& g, const std::vector<std::string>& group,
                 std::optional<std::string> new_id = std::nullopt,
                 const EvalOptions& opts = {});

// Substitutes `fragment` for vertex v. Dangling edge j of the fragment takes
// over v's port j. The fragment's exterior is checked against f_v first.
// Fragment vertex ids are prefixed with "<v>/".
NFG vertex_split(const NFG& g, const std::string& v, const NFG& fragment,
                 Tolerance tol = kDefaultTolerance);

// Splices a binary equality indicator into edge e.
NFG equality_insert(const NFG& g, EdgeId e);
// Removes a binary equality vertex and joins the two cut edges.
NFG equality_delete(const NFG& g, const std::string& v,
                    Tolerance tol = kDefaultTolerance);

// Phi and Phihat are bivariate; `*_coupling` names the port carrying the
// coupling alphabet Y, the other port carries X.
struct DualPair {
  LocalFunction phi;
  LocalFunction phihat;
  size_t phi_coupling = 1;
  size_t phihat_coupling = 1;
};

// True iff <Phi(x, y), Phihat(x', y)> summed over y equals delta_eq(x, x')
// entrywise within tolerance. Throws kArityMismatch / kAlphabetMismatch for
// shape problems.
bool dual_pair_check(const LocalFunction& phi, const LocalFunction& phihat,
                     size_t phi_coupling = 1, size_t phihat_coupling = 1,
                     Tolerance tol = kDefaultTolerance);

// Splices Phi (next to the edge's first end) and Phihat (next to the second
// end, or the free end of a dangling edge) into e, joined by a new edge over
// the coupling alphabet.
NFG dual_vertex_insert(const NFG& g, EdgeId e, const DualPair& pair,
                       Tolerance tol = kDefaultTolerance);
// Reverse of dual_vertex_insert; v1 and v2 must be joined by one edge whose
// ports form a dual pair.
NFG dual_vertex_delete(const NFG& g, const std::string& v1, const std::string& v2,
                       Tolerance tol = kDefaultTolerance);

}  // namespace nfg

#endif  // NFG_REWRITE_HPP_
