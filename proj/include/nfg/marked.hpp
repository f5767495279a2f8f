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

#ifndef NFG_MARKED_HPP_
#define NFG_MARKED_HPP_

#include <string>
#include <vector>

#include "nfg/graph.hpp"

namespace nfg {

enum class Mark { kInternal, kExternal };

struct MarkedVariable {
  std::string name;
  Alphabet alphabet;
  Mark mark = Mark::kInternal;
};

struct MarkedFactor {
  std::string id;
  LocalFunction function;
  std::vector<std::string> variables;  // one per port
};

// A sum-of-products form: factors over named variables, internal ones summed
// out, external ones kept. Variables may have any degree >= 1 except that an
// internal variable must appear at least twice.
class MarkedFactorGraph {
 public:
  static MarkedFactorGraph build(std::vector<MarkedVariable> variables,
                                 std::vector<MarkedFactor> factors);

  const std::vector<MarkedVariable>& variables() const noexcept { return variables_; }
  const std::vector<MarkedFactor>& factors() const noexcept { return factors_; }
  const MarkedVariable& variable(const std::string& name) const;
  // Number of factor slots naming the variable.
  size_t degree(const std::string& name) const;

 private:
  std::vector<MarkedVariable> variables_;
  std::vector<MarkedFactor> factors_;
};

// Variable replication. Variables already of normal degree (internal 2,
// external 1) become plain edges; every other variable gets an equality
// vertex "eq:<name>" wired to its slots, plus a dangling edge for the
// original when it is external. Dangling edges follow the declared order of
// the external variables.
NFG normalize(const MarkedFactorGraph& m);

}  // namespace nfg

#endif  // NFG_MARKED_HPP_
