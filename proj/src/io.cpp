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

#include "nfg/io.hpp"

#include <fstream>
#include <sstream>

#include "nfg/error.hpp"

namespace nfg::io {
namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::kParseError, where + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing \"") + key + "\"");
  return *it;
}

const Json& array_at(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array");
  return j;
}

size_t as_index(const Json& j, const std::string& where) {
  if (j.is_number_unsigned()) return j.get<size_t>();
  if (j.is_number_integer() && j.get<long long>() >= 0) return static_cast<size_t>(j.get<long long>());
  if (j.is_string()) {
    try {
      size_t used = 0;
      const unsigned long v = std::stoul(j.get<std::string>(), &used);
      if (used == j.get<std::string>().size()) return v;
    } catch (const std::exception&) {
    }
  }
  fail(where, "expected a non-negative integer");
}

std::string as_string(const Json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected a string");
  return j.get<std::string>();
}

Alphabet alphabet_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) {
    const auto n = j.get<long long>();
    if (n < 1) fail(where, "alphabet size must be positive");
    return Alphabet::plain(static_cast<size_t>(n));
  }
  return Alphabet::parse(as_string(j, where));
}

std::vector<Scalar> values_from_json(const Json& j, const std::string& where) {
  std::vector<Scalar> v;
  const Json& arr = array_at(j, where);
  for (size_t k = 0; k < arr.size(); ++k) {
    const Json& z = arr[k];
    if (z.is_number()) {
      v.emplace_back(z.get<double>(), 0.0);
    } else if (z.is_array() && z.size() == 2 && z[0].is_number() && z[1].is_number()) {
      v.emplace_back(z[0].get<double>(), z[1].get<double>());
    } else {
      fail(where + "[" + std::to_string(k) + "]", "expected a number or [re, im]");
    }
  }
  return v;
}

std::vector<Scalar> matrix_from_json(const Json& j, const std::string& where) {
  std::vector<Scalar> v;
  const Json& rows = array_at(j, where);
  for (size_t r = 0; r < rows.size(); ++r) {
    const auto row = values_from_json(rows[r], where + "[" + std::to_string(r) + "]");
    if (row.size() != rows.size()) fail(where, "matrix must be square");
    v.insert(v.end(), row.begin(), row.end());
  }
  return v;
}

PortRef port_from_json(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) fail(where, "expected [vertex, port]");
  return {as_string(j[0], where + "[0]"), as_index(j[1], where + "[1]")};
}

Matchgate matchgate_from_json(const Json& j) {
  GraphFile f = graph_from_json(j);
  return {std::move(f.graph), std::move(f.external)};
}

Json alphabet_literal(const Alphabet& a) { return a.to_string(); }

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    fail(path, e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path);
  out << text;
  if (!out) throw Error(ErrorCode::kIoError, "write failed: " + path);
}

Scalar scalar_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  throw Error(ErrorCode::kParseError, "expected a number or [re, im], got " + j.dump());
}

Json scalar_to_json(Scalar z) { return Json::array({z.real(), z.imag()}); }

Json tensor_to_json(const LocalFunction& f) {
  Json j;
  j["ports"] = Json::array();
  for (const auto& p : f.ports()) j["ports"].push_back(alphabet_literal(p));
  j["values"] = Json::array();
  for (const auto& z : f.values()) j["values"].push_back(scalar_to_json(z));
  return j;
}

LocalFunction tensor_from_json(const Json& j) {
  std::vector<Alphabet> ports;
  const Json& pj = array_at(field(j, "ports", "tensor"), "tensor.ports");
  for (size_t k = 0; k < pj.size(); ++k) ports.push_back(alphabet_from_json(pj[k], "tensor.ports"));
  return LocalFunction(std::move(ports), values_from_json(field(j, "values", "tensor"), "tensor.values"));
}

NFG nfg_from_json(const Json& j) {
  std::map<std::string, Alphabet> alphabets;
  if (j.contains("alphabets")) {
    const Json& aj = j["alphabets"];
    if (!aj.is_object()) fail("alphabets", "expected an object");
    for (const auto& [label, lit] : aj.items()) alphabets.emplace(label, alphabet_from_json(lit, "alphabets." + label));
  }
  auto lookup = [&](const Json& p, const std::string& where) {
    if (p.is_string()) {
      auto it = alphabets.find(p.get<std::string>());
      if (it != alphabets.end()) return it->second;
    }
    return alphabet_from_json(p, where);
  };

  std::vector<Vertex> vertices;
  const Json& vj = field(j, "vertices", "nfg");
  if (!vj.is_object()) fail("vertices", "expected an object");
  for (const auto& [id, body] : vj.items()) {
    const std::string where = "vertices." + id;
    std::vector<Alphabet> ports;
    const Json& pj = array_at(field(body, "ports", where), where + ".ports");
    for (size_t k = 0; k < pj.size(); ++k) ports.push_back(lookup(pj[k], where + ".ports"));
    const Json& values = field(body, "values", where);
    if (values.is_string()) {
      const std::string kind = values.get<std::string>();
      for (const auto& p : ports)
        if (!(p == ports.front())) fail(where, kind + " needs equal port alphabets");
      if (kind == "delta_eq") {
        if (ports.size() < 2) fail(where, "delta_eq needs at least two ports");
        vertices.push_back({id, delta_eq(ports[0], ports.size())});
      } else if (kind == "delta_plus") {
        if (ports.size() != 2) fail(where, "delta_plus needs exactly two ports");
        vertices.push_back({id, delta_plus(ports[0])});
      } else {
        fail(where, "unknown shorthand \"" + kind + "\"");
      }
    } else {
      vertices.push_back({id, LocalFunction(std::move(ports), values_from_json(values, where + ".values"))});
    }
  }

  std::vector<InternalEdge> internal;
  if (j.contains("internal_edges")) {
    const Json& ej = array_at(j["internal_edges"], "internal_edges");
    for (size_t i = 0; i < ej.size(); ++i) {
      const std::string where = "internal_edges[" + std::to_string(i) + "]";
      if (!ej[i].is_array() || ej[i].size() != 2) fail(where, "expected [[v, p], [v, p]]");
      internal.push_back({port_from_json(ej[i][0], where), port_from_json(ej[i][1], where)});
    }
  }
  std::vector<DanglingEdge> dangling;
  if (j.contains("dangling")) {
    const Json& dj = array_at(j["dangling"], "dangling");
    for (size_t i = 0; i < dj.size(); ++i) {
      const std::string where = "dangling[" + std::to_string(i) + "]";
      if (!dj[i].is_array() || dj[i].size() != 2) fail(where, "expected [[v, p], label]");
      dangling.push_back({port_from_json(dj[i][0], where), as_string(dj[i][1], where)});
    }
  }
  return NFG::build(std::move(vertices), std::move(internal), std::move(dangling));
}

Json nfg_to_json(const NFG& g) {
  Json j;
  j["alphabets"] = Json::object();
  for (const auto& v : g.vertices())
    for (const auto& p : v.function.ports()) j["alphabets"][p.to_string()] = alphabet_literal(p);
  j["vertices"] = Json::object();
  for (const auto& v : g.vertices()) {
    Json body;
    body["ports"] = Json::array();
    for (const auto& p : v.function.ports()) body["ports"].push_back(p.to_string());
    body["values"] = tensor_to_json(v.function)["values"];
    j["vertices"][v.id] = std::move(body);
  }
  j["internal_edges"] = Json::array();
  for (const auto& e : g.internal_edges()) {
    j["internal_edges"].push_back(Json::array({Json::array({e.a.vertex, e.a.port}), Json::array({e.b.vertex, e.b.port})}));
  }
  j["dangling"] = Json::array();
  for (const auto& d : g.dangling_edges()) {
    j["dangling"].push_back(Json::array({Json::array({d.at.vertex, d.at.port}), d.label}));
  }
  return j;
}

MarkedFactorGraph marked_from_json(const Json& j) {
  std::vector<MarkedVariable> vars;
  const Json& vj = field(j, "variables", "marked");
  if (!vj.is_object()) fail("variables", "expected an object");
  for (const auto& [name, body] : vj.items()) {
    const std::string where = "variables." + name;
    const std::string mark = as_string(field(body, "mark", where), where + ".mark");
    if (mark != "internal" && mark != "external") fail(where + ".mark", "expected \"internal\" or \"external\"");
    vars.push_back({name, alphabet_from_json(field(body, "alphabet", where), where + ".alphabet"),
                    mark == "internal" ? Mark::kInternal : Mark::kExternal});
  }
  std::map<std::string, Alphabet> by_name;
  for (const auto& v : vars) by_name.emplace(v.name, v.alphabet);

  std::vector<MarkedFactor> factors;
  const Json& fj = field(j, "factors", "marked");
  if (!fj.is_object()) fail("factors", "expected an object");
  for (const auto& [id, body] : fj.items()) {
    const std::string where = "factors." + id;
    std::vector<std::string> names;
    std::vector<Alphabet> ports;
    for (const auto& n : array_at(field(body, "variables", where), where + ".variables")) {
      names.push_back(as_string(n, where + ".variables"));
      auto it = by_name.find(names.back());
      if (it == by_name.end()) fail(where, "undeclared variable " + names.back());
      ports.push_back(it->second);
    }
    const Json& values = field(body, "values", where);
    LocalFunction f = values.is_string() && values.get<std::string>() == "delta_eq"
                          ? delta_eq(ports.at(0), ports.size())
                          : LocalFunction(std::move(ports), values_from_json(values, where + ".values"));
    factors.push_back({id, std::move(f), std::move(names)});
  }
  return MarkedFactorGraph::build(std::move(vars), std::move(factors));
}

TransformerAssignment assignment_from_json(const Json& j, const NFG& g) {
  if (!j.is_object()) fail("assignment", "expected an object");
  auto make = [](const Json& spec, const Alphabet& x, const std::string& where) -> Transformer {
    if (spec.is_string()) {
      const std::string s = spec.get<std::string>();
      if (s == "identity") return Transformer::identity(x);
      if (s == "kappa") return Transformer::kappa(x);
      if (s == "kappa_hat") return Transformer::kappa_hat(x);
      fail(where, "unknown transformer shorthand \"" + s + "\"");
    }
    if (spec.is_object()) {
      const Alphabet y = spec.contains("codomain") ? alphabet_from_json(spec["codomain"], where + ".codomain") : x;
      return Transformer(x, y, matrix_from_json(field(spec, "matrix", where), where + ".matrix"));
    }
    return Transformer(x, x, matrix_from_json(spec, where));
  };
  TransformerAssignment a;
  for (const auto& [key, spec] : j.items()) {
    if (key == "*") continue;
    const auto colon = key.rfind(':');
    if (colon == std::string::npos) fail("assignment." + key, "expected \"vertex:port\"");
    PortRef ref{key.substr(0, colon), as_index(Json(key.substr(colon + 1)), "assignment." + key)};
    const Vertex& v = g.vertex(ref.vertex);
    if (ref.port >= v.function.arity()) throw Error(ErrorCode::kBadPortIndex, key);
    a.emplace(ref, make(spec, v.function.port(ref.port), "assignment." + key));
  }
  if (j.contains("*")) {
    for (const auto& v : g.vertices()) {
      for (size_t p = 0; p < v.function.arity(); ++p) {
        if (!a.count({v.id, p})) a.emplace(PortRef{v.id, p}, make(j["*"], v.function.port(p), "assignment.*"));
      }
    }
  }
  return a;
}

PlanarEmbedding embedding_from_json(const Json& j, size_t vertex_count) {
  PlanarEmbedding emb;
  emb.rotation.resize(vertex_count);
  if (j.is_array()) {
    if (j.size() != vertex_count) fail("rotation", "expected one list per vertex");
    for (size_t v = 0; v < j.size(); ++v)
      for (const auto& e : array_at(j[v], "rotation")) emb.rotation[v].push_back(as_index(e, "rotation"));
    return emb;
  }
  if (!j.is_object()) fail("rotation", "expected an object or an array");
  for (const auto& [key, list] : j.items()) {
    const size_t v = as_index(Json(key), "rotation." + key);
    if (v >= vertex_count) fail("rotation." + key, "vertex out of range");
    for (const auto& e : array_at(list, "rotation." + key)) emb.rotation[v].push_back(as_index(e, "rotation." + key));
  }
  return emb;
}

GraphFile graph_from_json(const Json& j) {
  GraphFile out;
  const size_t n = as_index(field(j, "vertices", "graph"), "graph.vertices");
  std::vector<WeightedEdge> edges;
  if (j.contains("edges")) {
    const Json& ej = array_at(j["edges"], "graph.edges");
    for (size_t i = 0; i < ej.size(); ++i) {
      const std::string where = "graph.edges[" + std::to_string(i) + "]";
      if (!ej[i].is_array() || ej[i].size() < 2 || ej[i].size() > 3) fail(where, "expected [u, v, weight?]");
      WeightedEdge e{as_index(ej[i][0], where), as_index(ej[i][1], where), 1.0};
      if (ej[i].size() == 3) e.w = scalar_from_json(ej[i][2]);
      edges.push_back(e);
    }
  }
  out.graph = WeightedGraph(n, std::move(edges));
  if (j.contains("rotation")) out.embedding = embedding_from_json(j["rotation"], n);
  if (j.contains("external")) {
    for (const auto& v : array_at(j["external"], "graph.external")) out.external.push_back(as_index(v, "graph.external"));
  }
  return out;
}

Json graph_to_json(const WeightedGraph& h, const std::optional<PlanarEmbedding>& emb,
                   const std::vector<size_t>& external) {
  Json j;
  j["vertices"] = h.vertex_count();
  j["edges"] = Json::array();
  for (const auto& e : h.edges()) j["edges"].push_back(Json::array({e.u, e.v, scalar_to_json(e.w)}));
  if (emb) {
    j["rotation"] = Json::object();
    for (size_t v = 0; v < emb->rotation.size(); ++v) j["rotation"][std::to_string(v)] = emb->rotation[v];
  }
  if (!external.empty()) j["external"] = external;
  return j;
}

AssemblyFile assembly_from_json(const Json& j) {
  AssemblyFile out;
  const Json& gj = array_at(field(j, "gates", "assembly"), "assembly.gates");
  for (size_t i = 0; i < gj.size(); ++i) out.gates.push_back(matchgate_from_json(gj[i]));
  if (j.contains("connections")) {
    const Json& cj = array_at(j["connections"], "assembly.connections");
    for (size_t c = 0; c < cj.size(); ++c) {
      const std::string where = "connections[" + std::to_string(c) + "]";
      if (!cj[c].is_array() || cj[c].size() != 2) fail(where, "expected [[gate, ext], [gate, ext]]");
      auto end = [&](const Json& e) {
        if (!e.is_array() || e.size() != 2) fail(where, "expected [gate, ext]");
        return std::pair{as_index(e[0], where), as_index(e[1], where)};
      };
      const auto [ga, ea] = end(cj[c][0]);
      const auto [gb, eb] = end(cj[c][1]);
      out.connections.push_back({ga, ea, gb, eb});
    }
  }
  return out;
}

GateMapFile gate_map_from_json(const Json& j) {
  GateMapFile out;
  const Json& gj = field(j, "gates", "gate map");
  if (!gj.is_object()) fail("gates", "expected an object keyed by vertex id");
  for (const auto& [id, body] : gj.items()) out.gates.emplace(id, matchgate_from_json(body));
  if (j.contains("rotation")) {
    // Vertex count of the composite graph is implied by the rotation itself.
    const Json& rj = j["rotation"];
    size_t n = rj.size();
    if (rj.is_object()) {
      n = 0;
      for (const auto& [key, list] : rj.items()) n = std::max(n, as_index(Json(key), "rotation") + 1);
    }
    out.embedding = embedding_from_json(rj, n);
  }
  return out;
}

namespace {

Codeword word_from_json(const Json& w, const std::vector<FiniteAbelianGroup>& ambient, const std::string& where) {
  Codeword out;
  const Json& arr = array_at(w, where);
  if (arr.size() != ambient.size()) fail(where, "expected " + std::to_string(ambient.size()) + " symbols");
  for (size_t k = 0; k < arr.size(); ++k) {
    std::vector<int> residues;
    if (arr[k].is_array()) {
      for (const auto& r : arr[k]) residues.push_back(static_cast<int>(as_index(r, where)));
    } else {
      residues.push_back(static_cast<int>(as_index(arr[k], where)));
    }
    out.push_back(GroupElement{std::move(residues)});
  }
  return out;
}

}  // namespace

GroupCode code_from_json(const Json& j) {
  std::vector<FiniteAbelianGroup> ambient;
  for (const auto& a : array_at(field(j, "ambient", "code"), "code.ambient")) {
    ambient.push_back(FiniteAbelianGroup::parse(as_string(a, "code.ambient")));
  }
  std::vector<Codeword> words;
  const bool gen = j.contains("generators");
  const Json& list = gen ? j["generators"] : field(j, "codewords", "code");
  for (size_t i = 0; i < array_at(list, "code").size(); ++i) {
    words.push_back(word_from_json(list[i], ambient, std::string(gen ? "generators" : "codewords") + "[" +
                                                          std::to_string(i) + "]"));
  }
  return gen ? GroupCode::from_generators(std::move(ambient), words) : GroupCode(std::move(ambient), words);
}

Json code_to_json(const GroupCode& c) {
  Json j;
  j["ambient"] = Json::array();
  for (const auto& g : c.ambient()) j["ambient"].push_back(g.to_string());
  j["codewords"] = Json::array();
  for (const auto& w : c.codewords()) {
    Json word = Json::array();
    for (const auto& s : w) {
      if (s.residues.size() == 1) {
        word.push_back(s.residues[0]);
      } else {
        word.push_back(s.residues);
      }
    }
    j["codewords"].push_back(std::move(word));
  }
  return j;
}

}  // namespace nfg::io
