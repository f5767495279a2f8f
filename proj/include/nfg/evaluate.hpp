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

#ifndef NFG_EVALUATE_HPP_
#define NFG_EVALUATE_HPP_

#include <span>
#include <vector>

#include "nfg/graph.hpp"

namespace nfg {

struct EvalOptions {
  // Largest intermediate tensor the eliminator may build.
  size_t tensor_cap = size_t{1} << 24;
  // Largest total (internal x external) configuration space brute mode walks.
  double brute_cap = static_cast<double>(size_t{1} << 26);
};

enum class EvalMode { kBrute, kEliminate };

// Z_G(x_ext) = sum over internal configurations of the product of all local
// functions. Ports of the result are the dangling edges in declared order; a
// closed NFG yields a 0-port (scalar) function.
LocalFunction eval_exterior(const NFG& g, EvalMode mode = EvalMode::kEliminate,
                            const EvalOptions& opts = {});

// Direct summation over every internal configuration (parallel kernel).
LocalFunction eval_brute(const NFG& g, const EvalOptions& opts = {});
// Same summation through the serial reference kernel.
LocalFunction eval_brute_serial(const NFG& g, const EvalOptions& opts = {});

// Pairwise contraction following `order`, a permutation of internal edge
// indices. Self-loops are traced; multi-edges between the two pieces being
// joined are summed together, and later mentions of them are no-ops.
LocalFunction eval_eliminate(const NFG& g, std::span<const size_t> order,
                             const EvalOptions& opts = {});

// Greedy order: repeatedly eliminates the edge whose contraction yields the
// smallest intermediate tensor (ties broken by lower edge index).
std::vector<size_t> default_elimination_order(const NFG& g);

}  // namespace nfg

#endif  // NFG_EVALUATE_HPP_
