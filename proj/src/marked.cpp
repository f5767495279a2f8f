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

#include "nfg/marked.hpp"

#include <map>
#include <set>

#include "nfg/error.hpp"

namespace nfg {

MarkedFactorGraph MarkedFactorGraph::build(std::vector<MarkedVariable> variables,
                                           std::vector<MarkedFactor> factors) {
  std::vector<Issue> issues;
  std::map<std::string, const MarkedVariable*> by_name;
  for (const auto& v : variables) {
    if (!by_name.emplace(v.name, &v).second) {
      issues.push_back({ErrorCode::kInvalidArgument, "variable declared twice: " + v.name});
    }
  }
  std::map<std::string, size_t> degree;
  std::set<std::string> ids;
  for (const auto& f : factors) {
    if (!ids.insert(f.id).second) issues.push_back({ErrorCode::kDuplicateVertex, f.id});
    if (f.variables.size() != f.function.arity()) {
      issues.push_back({ErrorCode::kArityMismatch,
                        f.id + " has " + std::to_string(f.function.arity()) + " ports but " +
                            std::to_string(f.variables.size()) + " variables"});
      continue;
    }
    for (size_t p = 0; p < f.variables.size(); ++p) {
      auto it = by_name.find(f.variables[p]);
      if (it == by_name.end()) {
        issues.push_back({ErrorCode::kInvalidArgument, f.id + " names undeclared variable " + f.variables[p]});
        continue;
      }
      ++degree[f.variables[p]];
      if (!(it->second->alphabet == f.function.port(p))) {
        issues.push_back({ErrorCode::kAlphabetMismatch,
                          f.id + ":" + std::to_string(p) + " is " + f.function.port(p).to_string() +
                              ", variable " + f.variables[p] + " is " + it->second->alphabet.to_string()});
      }
    }
  }
  for (const auto& v : variables) {
    const size_t d = degree[v.name];
    if (d == 0) issues.push_back({ErrorCode::kUnusedVariable, v.name});
    if (d == 1 && v.mark == Mark::kInternal) issues.push_back({ErrorCode::kDegreeOneInternal, v.name});
  }
  if (!issues.empty()) throw ValidationError(std::move(issues));
  MarkedFactorGraph m;
  m.variables_ = std::move(variables);
  m.factors_ = std::move(factors);
  return m;
}

const MarkedVariable& MarkedFactorGraph::variable(const std::string& name) const {
  for (const auto& v : variables_)
    if (v.name == name) return v;
  throw Error(ErrorCode::kInvalidArgument, "no variable " + name);
}

size_t MarkedFactorGraph::degree(const std::string& name) const {
  size_t d = 0;
  for (const auto& f : factors_)
    for (const auto& n : f.variables) d += n == name;
  return d;
}

NFG normalize(const MarkedFactorGraph& m) {
  std::vector<Vertex> vertices;
  std::set<std::string> taken;
  std::map<std::string, std::vector<PortRef>> slots;
  for (const auto& f : m.factors()) {
    vertices.push_back({f.id, f.function});
    taken.insert(f.id);
    for (size_t p = 0; p < f.variables.size(); ++p) slots[f.variables[p]].push_back({f.id, p});
  }

  std::vector<InternalEdge> internal;
  std::vector<DanglingEdge> dangling;
  for (const auto& var : m.variables()) {
    const auto& s = slots[var.name];
    const bool external = var.mark == Mark::kExternal;
    if (external && s.size() == 1) {
      dangling.push_back({s[0], var.name});
      continue;
    }
    if (!external && s.size() == 2) {
      internal.push_back({s[0], s[1]});
      continue;
    }
    std::string id = "eq:" + var.name;
    while (taken.count(id)) id += "'";
    taken.insert(id);
    vertices.push_back({id, delta_eq(var.alphabet, s.size() + (external ? 1 : 0))});
    for (size_t k = 0; k < s.size(); ++k) internal.push_back({s[k], {id, k}});
    if (external) dangling.push_back({{id, s.size()}, var.name});
  }
  return NFG::build(std::move(vertices), std::move(internal), std::move(dangling));
}

}  // namespace nfg
