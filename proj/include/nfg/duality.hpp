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

#ifndef NFG_DUALITY_HPP_
#define NFG_DUALITY_HPP_

#include <optional>

#include "nfg/evaluate.hpp"
#include "nfg/graph.hpp"

namespace nfg {

// Fourier-transforms every local function and splices a delta_plus vertex
// into every internal edge. Internal edge i becomes edges 2i and 2i+1, with
// the endpoint of lower (vertex id, port) attached to delta_plus port 0. The
// new vertices, ids "plus<i>", follow the original ones.
// Throws kNotGroupAlphabet naming the first edge with a plain alphabet.
NFG dualize(const NFG& g);

struct DualityReport {
  double scale = 1.0;  // |X_{E^int}|
  double max_deviation = 0.0;
  bool ok = true;
  std::optional<LocalFunction> dual_exterior;  // Z of the dual NFG
  std::optional<LocalFunction> expected;       // scale * F[Z_G]
};

DualityReport verify_duality(const NFG& g, EvalMode mode = EvalMode::kEliminate,
                             Tolerance tol = kDefaultTolerance,
                             const EvalOptions& opts = {});

}  // namespace nfg

#endif  // NFG_DUALITY_HPP_
