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

#include "nfg/graph.hpp"

#include <set>

#include "nfg/error.hpp"

namespace nfg {

std::string to_string(const PortRef& p) { return p.vertex + ":" + std::to_string(p.port); }

NFG NFG::build(std::vector<Vertex> vertices, std::vector<InternalEdge> internal_edges,
               std::vector<DanglingEdge> dangling_edges) {
  NFG g;
  g.vertices_ = std::move(vertices);
  g.internal_ = std::move(internal_edges);
  g.dangling_ = std::move(dangling_edges);

  std::vector<Issue> issues;
  for (size_t i = 0; i < g.vertices_.size(); ++i) {
    if (!g.index_.emplace(g.vertices_[i].id, i).second) {
      issues.push_back({ErrorCode::kDuplicateVertex, g.vertices_[i].id});
    }
  }

  // Returns false (after recording why) when p does not name a real port.
  auto check_port = [&](const PortRef& p) {
    auto it = g.index_.find(p.vertex);
    if (it == g.index_.end()) {
      issues.push_back({ErrorCode::kUnknownVertex, to_string(p)});
      return false;
    }
    if (p.port >= g.vertices_[it->second].function.arity()) {
      issues.push_back({ErrorCode::kBadPortIndex, to_string(p)});
      return false;
    }
    return true;
  };
  auto cover = [&](const PortRef& p, Endpoint e) {
    if (!g.incidence_.emplace(p, std::move(e)).second) {
      issues.push_back({ErrorCode::kDoubleCoveredPort, to_string(p)});
    }
  };
  auto port_alphabet = [&](const PortRef& p) -> const Alphabet& {
    return g.vertices_[g.index_.at(p.vertex)].function.port(p.port);
  };

  for (size_t i = 0; i < g.internal_.size(); ++i) {
    const auto& [a, b] = g.internal_[i];
    const bool ok_a = check_port(a);
    const bool ok_b = check_port(b);
    if (ok_a && ok_b && a == b) {
      issues.push_back({ErrorCode::kDoubleCoveredPort, "edge joins " + to_string(a) + " to itself"});
      continue;
    }
    if (ok_a) cover(a, Endpoint{EdgeId::internal(i), b});
    if (ok_b) cover(b, Endpoint{EdgeId::internal(i), a});
    if (ok_a && ok_b && !(port_alphabet(a) == port_alphabet(b))) {
      issues.push_back({ErrorCode::kAlphabetMismatch,
                        to_string(a) + " is " + port_alphabet(a).to_string() + ", " +
                            to_string(b) + " is " + port_alphabet(b).to_string()});
    }
  }
  std::set<std::string> labels;
  for (size_t i = 0; i < g.dangling_.size(); ++i) {
    const auto& d = g.dangling_[i];
    if (check_port(d.at)) cover(d.at, Endpoint{EdgeId::dangling(i), std::nullopt});
    if (!labels.insert(d.label).second) {
      issues.push_back({ErrorCode::kDuplicateExternalLabel, d.label});
    }
  }
  for (const auto& v : g.vertices_) {
    for (size_t p = 0; p < v.function.arity(); ++p) {
      PortRef ref{v.id, p};
      if (!g.incidence_.count(ref)) issues.push_back({ErrorCode::kUncoveredPort, to_string(ref)});
    }
  }
  if (!issues.empty()) throw ValidationError(std::move(issues));
  return g;
}

size_t NFG::vertex_index(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw Error(ErrorCode::kUnknownVertex, id);
  return it->second;
}

const Vertex& NFG::vertex(const std::string& id) const { return vertices_[vertex_index(id)]; }

Endpoint NFG::endpoint(const PortRef& p) const {
  auto it = incidence_.find(p);
  if (it == incidence_.end()) throw Error(ErrorCode::kBadPortIndex, to_string(p));
  return it->second;
}

const Alphabet& NFG::alphabet(EdgeId e) const {
  if (e.kind == EdgeId::Kind::kInternal) {
    if (e.index >= internal_.size()) {
      throw Error(ErrorCode::kInvalidArgument, "no internal edge " + std::to_string(e.index));
    }
    const auto& a = internal_[e.index].a;
    return function(a.vertex).port(a.port);
  }
  if (e.index >= dangling_.size()) {
    throw Error(ErrorCode::kInvalidArgument, "no dangling edge " + std::to_string(e.index));
  }
  const auto& at = dangling_[e.index].at;
  return function(at.vertex).port(at.port);
}

std::vector<Alphabet> NFG::external_alphabets() const {
  std::vector<Alphabet> out;
  for (size_t i = 0; i < dangling_.size(); ++i) out.push_back(alphabet(EdgeId::dangling(i)));
  return out;
}

double NFG::internal_configuration_count() const {
  double n = 1.0;
  for (size_t i = 0; i < internal_.size(); ++i) {
    n *= static_cast<double>(alphabet(EdgeId::internal(i)).size());
  }
  return n;
}

std::string NFG::fresh_id(const std::string& prefix) const {
  if (!has_vertex(prefix)) return prefix;
  for (size_t k = 1;; ++k) {
    std::string id = prefix + std::to_string(k);
    if (!has_vertex(id)) return id;
  }
}

}  // namespace nfg
