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

#ifndef NFG_IO_HPP_
#define NFG_IO_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "nfg/code.hpp"
#include "nfg/holo.hpp"
#include "nfg/marked.hpp"
#include "nfg/perfmatch.hpp"

// JSON file formats. Parsers throw Error(kParseError) with a pointer to the
// offending element; structural problems found after parsing surface as the
// owning module's errors.
namespace nfg::io {

using Json = nlohmann::ordered_json;

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

// A number, or [re, im].
Scalar scalar_from_json(const Json& j);
Json scalar_to_json(Scalar z);

// {"ports": ["Z2", "3"], "values": [[re, im], ...]}
Json tensor_to_json(const LocalFunction& f);
LocalFunction tensor_from_json(const Json& j);

// {"alphabets": {label: literal},
//  "vertices": {id: {"ports": [label...], "values": [...] | "delta_eq" | "delta_plus"}},
//  "internal_edges": [[[v, p], [v, p]], ...],
//  "dangling": [[[v, p], "label"], ...]}
NFG nfg_from_json(const Json& j);
Json nfg_to_json(const NFG& g);

// {"variables": {name: {"alphabet": literal, "mark": "internal"|"external"}},
//  "factors": {id: {"variables": [name...], "values": [...]}}}
MarkedFactorGraph marked_from_json(const Json& j);

// {"v:p": matrix | "identity" | "kappa" | "kappa_hat" | {"matrix": ..., "codomain": literal}}
// Matrix rows run over the port alphabet X, columns over Y. The key "*"
// supplies an entry for every port not listed.
TransformerAssignment assignment_from_json(const Json& j, const NFG& g);

// {"vertices": n, "edges": [[u, v, w?], ...], "rotation": {v: [edge...]}?,
//  "external": [v...]?}
struct GraphFile {
  WeightedGraph graph;
  std::optional<PlanarEmbedding> embedding;
  std::vector<size_t> external;
};
GraphFile graph_from_json(const Json& j);
Json graph_to_json(const WeightedGraph& h, const std::optional<PlanarEmbedding>& emb = std::nullopt,
                   const std::vector<size_t>& external = {});
PlanarEmbedding embedding_from_json(const Json& j, size_t vertex_count);

// {"gates": [graph...], "connections": [[[gate, ext], [gate, ext]], ...]}
struct AssemblyFile {
  std::vector<Matchgate> gates;
  std::vector<GateConnection> connections;
};
AssemblyFile assembly_from_json(const Json& j);

// {"gates": {vertex: graph}, "rotation": {...}?}; the rotation, if present, is
// a rotation system of the assembled graph.
struct GateMapFile {
  std::map<std::string, Matchgate> gates;
  std::optional<PlanarEmbedding> embedding;
};
GateMapFile gate_map_from_json(const Json& j);

// {"ambient": ["Z2", ...], "codewords": [[s, ...], ...]} or with "generators"
// instead of "codewords". A symbol is an integer or a list of residues.
GroupCode code_from_json(const Json& j);
Json code_to_json(const GroupCode& c);

}  // namespace nfg::io

#endif  // NFG_IO_HPP_
