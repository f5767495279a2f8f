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

#ifndef NFG_GRAPH_HPP_
#define NFG_GRAPH_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nfg/tensor.hpp"

namespace nfg {

struct PortRef {
  std::string vertex;
  size_t port = 0;

  friend bool operator==(const PortRef&, const PortRef&) = default;
  friend auto operator<=>(const PortRef&, const PortRef&) = default;
};

std::string to_string(const PortRef& p);

struct Vertex {
  std::string id;
  LocalFunction function;

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

// A regular edge joining two ports. Both ends may sit on the same vertex.
struct InternalEdge {
  PortRef a;
  PortRef b;

  friend bool operator==(const InternalEdge&, const InternalEdge&) = default;
};

struct DanglingEdge {
  PortRef at;
  std::string label;

  friend bool operator==(const DanglingEdge&, const DanglingEdge&) = default;
};

// Edges are identified by kind and position in the NFG's edge lists.
struct EdgeId {
  enum class Kind { kInternal, kDangling };
  Kind kind = Kind::kInternal;
  size_t index = 0;

  static EdgeId internal(size_t i) { return {Kind::kInternal, i}; }
  static EdgeId dangling(size_t i) { return {Kind::kDangling, i}; }
  friend bool operator==(const EdgeId&, const EdgeId&) = default;
};

// The other end of a port: either another port or a dangling label.
struct Endpoint {
  EdgeId edge;
  std::optional<PortRef> peer;  // empty for dangling edges
};

// A validated normal factor graph (V, E^int, E^ext, f_V). Immutable; every
// rewrite produces a new instance. Vertex order is insertion order and is
// preserved by serialization.
class NFG {
 public:
  // Throws ValidationError listing every violated invariant.
  static NFG build(std::vector<Vertex> vertices,
                   std::vector<InternalEdge> internal_edges,
                   std::vector<DanglingEdge> dangling_edges);

  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  const std::vector<InternalEdge>& internal_edges() const noexcept { return internal_; }
  const std::vector<DanglingEdge>& dangling_edges() const noexcept { return dangling_; }

  bool has_vertex(const std::string& id) const { return index_.count(id) > 0; }
  size_t vertex_index(const std::string& id) const;
  const Vertex& vertex(const std::string& id) const;
  const LocalFunction& function(const std::string& id) const { return vertex(id).function; }

  // Edge attached to a given port.
  Endpoint endpoint(const PortRef& p) const;

  const Alphabet& alphabet(EdgeId e) const;
  // Alphabets of the dangling edges in declared order.
  std::vector<Alphabet> external_alphabets() const;
  // |X_{E^int}|, product of internal edge alphabet sizes (as a double: it is
  // used as a scale factor and may exceed 2^64 for large graphs).
  double internal_configuration_count() const;

  // A vertex id not yet in use, of the form prefix, prefix1, prefix2, ...
  std::string fresh_id(const std::string& prefix) const;

  friend bool operator==(const NFG& a, const NFG& b) {
    return a.vertices_ == b.vertices_ && a.internal_ == b.internal_ && a.dangling_ == b.dangling_;
  }

 private:
  std::vector<Vertex> vertices_;
  std::vector<InternalEdge> internal_;
  std::vector<DanglingEdge> dangling_;
  std::map<std::string, size_t> index_;
  std::map<PortRef, Endpoint> incidence_;
};

}  // namespace nfg

#endif  // NFG_GRAPH_HPP_
