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

#include "nfg/rewrite.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>

#include "nfg/error.hpp"

namespace nfg {
namespace {

struct Parts {
  std::vector<Vertex> vertices;
  std::vector<InternalEdge> internal;
  std::vector<DanglingEdge> dangling;

  explicit Parts(const NFG& g)
      : vertices(g.vertices()), internal(g.internal_edges()), dangling(g.dangling_edges()) {}
  NFG build() { return NFG::build(std::move(vertices), std::move(internal), std::move(dangling)); }
};

// Removes `doomed` vertices, whose only outside connections are the edges at
// ports p1 and p2, and joins the far ends of those two edges. The joined edge
// keeps the position of the earlier of the two cut edges (or the dangling
// slot, when one of them is dangling).
NFG splice_out(const NFG& g, const std::set<std::string>& doomed, const PortRef& p1,
               const PortRef& p2) {
  const Endpoint e1 = g.endpoint(p1);
  const Endpoint e2 = g.endpoint(p2);
  if (e1.edge == e2.edge) {
    throw Error(ErrorCode::kInvalidArgument,
                "ports " + to_string(p1) + " and " + to_string(p2) +
                    " are joined to each other; deletion would leave a vertex-free loop");
  }
  if (!e1.peer && !e2.peer) {
    throw Error(ErrorCode::kInvalidArgument,
                "both cut edges are dangling; deletion would leave a bare wire");
  }
  for (const PortRef* peer : {&*e1.peer, e2.peer ? &*e2.peer : nullptr}) {
    if (peer && doomed.count(peer->vertex)) {
      throw Error(ErrorCode::kInvalidArgument, "cut edge leads back into the deleted vertices");
    }
  }

  Parts parts(g);
  std::erase_if(parts.vertices, [&](const Vertex& v) { return doomed.count(v.id) > 0; });

  std::optional<size_t> keep_internal;
  if (e1.peer && e2.peer) {
    keep_internal = std::min(e1.edge.index, e2.edge.index);
    parts.internal[*keep_internal] = InternalEdge{*e1.peer, *e2.peer};
  } else {
    const Endpoint& dang = e1.peer ? e2 : e1;
    const PortRef& inner = e1.peer ? *e1.peer : *e2.peer;
    parts.dangling[dang.edge.index].at = inner;
  }
  std::vector<InternalEdge> kept;
  for (size_t i = 0; i < parts.internal.size(); ++i) {
    const auto& ed = parts.internal[i];
    if (keep_internal && i == *keep_internal) {
      kept.push_back(ed);
      continue;
    }
    if (doomed.count(ed.a.vertex) || doomed.count(ed.b.vertex)) continue;
    kept.push_back(ed);
  }
  parts.internal = std::move(kept);
  for (const auto& d : parts.dangling) {
    if (doomed.count(d.at.vertex)) {
      throw Error(ErrorCode::kInvalidArgument, "deleted vertex carries another dangling edge");
    }
  }
  return parts.build();
}

}  // namespace

RewriteReport compare_exteriors(const NFG& before, const NFG& after, EvalMode mode, Tolerance tol,
                                const EvalOptions& opts) {
  RewriteReport r;
  r.before = eval_exterior(before, mode, opts);
  r.after = eval_exterior(after, mode, opts);
  if (!(r.before->ports() == r.after->ports())) {
    r.max_deviation = std::numeric_limits<double>::infinity();
    r.preserved = false;
    return r;
  }
  r.max_deviation = relative_deviation(r.after->values(), r.before->values());
  r.preserved = approx_equal(r.after->values(), r.before->values(), tol);
  return r;
}

NFG vertex_group(const NFG& g, const std::vector<std::string>& group,
                 std::optional<std::string> new_id, const EvalOptions& opts) {
  if (group.empty()) throw Error(ErrorCode::kInvalidArgument, "vertex group is empty");
  std::set<std::string> members;
  for (const auto& id : group) {
    (void)g.vertex_index(id);
    if (!members.insert(id).second) throw Error(ErrorCode::kInvalidArgument, "vertex listed twice: " + id);
  }

  std::vector<Vertex> sub_vertices;
  std::vector<InternalEdge> sub_internal;
  std::vector<DanglingEdge> sub_dangling;
  std::set<size_t> inside_edges;
  std::map<PortRef, size_t> boundary_slot;
  for (const auto& v : g.vertices()) {
    if (!members.count(v.id)) continue;
    sub_vertices.push_back(v);
    for (size_t p = 0; p < v.function.arity(); ++p) {
      const PortRef ref{v.id, p};
      const Endpoint ep = g.endpoint(ref);
      if (ep.peer && members.count(ep.peer->vertex)) {
        inside_edges.insert(ep.edge.index);
      } else {
        boundary_slot.emplace(ref, sub_dangling.size());
        sub_dangling.push_back({ref, "b" + std::to_string(sub_dangling.size())});
      }
    }
  }
  for (size_t i : inside_edges) sub_internal.push_back(g.internal_edges()[i]);
  const NFG sub = NFG::build(std::move(sub_vertices), std::move(sub_internal), std::move(sub_dangling));
  LocalFunction grouped = eval_exterior(sub, EvalMode::kEliminate, opts);

  const std::string id = new_id.value_or(g.fresh_id("group"));
  auto remap = [&](const PortRef& p) {
    auto it = boundary_slot.find(p);
    return it == boundary_slot.end() ? p : PortRef{id, it->second};
  };

  std::vector<Vertex> vertices;
  bool placed = false;
  for (const auto& v : g.vertices()) {
    if (!members.count(v.id)) {
      vertices.push_back(v);
    } else if (!placed) {
      vertices.push_back({id, grouped});
      placed = true;
    }
  }
  std::vector<InternalEdge> internal;
  for (size_t i = 0; i < g.internal_edges().size(); ++i) {
    if (inside_edges.count(i)) continue;
    const auto& e = g.internal_edges()[i];
    internal.push_back({remap(e.a), remap(e.b)});
  }
  std::vector<DanglingEdge> dangling;
  for (const auto& d : g.dangling_edges()) dangling.push_back({remap(d.at), d.label});
  return NFG::build(std::move(vertices), std::move(internal), std::move(dangling));
}

NFG vertex_split(const NFG& g, const std::string& v, const NFG& fragment, Tolerance tol) {
  const LocalFunction& f = g.function(v);
  const auto frag_ports = fragment.external_alphabets();
  if (frag_ports.size() != f.arity()) {
    throw Error(ErrorCode::kArityMismatch, "fragment has " + std::to_string(frag_ports.size()) +
                                               " dangling edges, vertex " + v + " has " +
                                               std::to_string(f.arity()) + " ports");
  }
  if (!(frag_ports == f.ports())) {
    throw Error(ErrorCode::kAlphabetMismatch, "fragment dangling alphabets differ from ports of " + v);
  }
  const LocalFunction realized = eval_exterior(fragment);
  if (!approx_equal(realized.values(), f.values(), tol)) {
    throw Error(ErrorCode::kFragmentMismatch,
                "fragment deviates from f_" + v + " by " +
                    std::to_string(relative_deviation(realized.values(), f.values())));
  }

  std::set<std::string> taken;
  for (const auto& u : g.vertices())
    if (u.id != v) taken.insert(u.id);
  std::map<std::string, std::string> rename;
  for (const auto& u : fragment.vertices()) {
    std::string id = v + "/" + u.id;
    while (taken.count(id)) id += "'";
    taken.insert(id);
    rename[u.id] = id;
  }
  auto renamed = [&](const PortRef& p) { return PortRef{rename.at(p.vertex), p.port}; };
  auto substitute = [&](const PortRef& p) {
    return p.vertex == v ? renamed(fragment.dangling_edges()[p.port].at) : p;
  };

  std::vector<Vertex> vertices;
  for (const auto& u : g.vertices()) {
    if (u.id != v) {
      vertices.push_back(u);
      continue;
    }
    for (const auto& w : fragment.vertices()) vertices.push_back({rename.at(w.id), w.function});
  }
  std::vector<InternalEdge> internal;
  for (const auto& e : g.internal_edges()) internal.push_back({substitute(e.a), substitute(e.b)});
  for (const auto& e : fragment.internal_edges()) internal.push_back({renamed(e.a), renamed(e.b)});
  std::vector<DanglingEdge> dangling;
  for (const auto& d : g.dangling_edges()) dangling.push_back({substitute(d.at), d.label});
  return NFG::build(std::move(vertices), std::move(internal), std::move(dangling));
}

NFG equality_insert(const NFG& g, EdgeId e) {
  const Alphabet alpha = g.alphabet(e);
  const std::string id = g.fresh_id("eq");
  Parts parts(g);
  parts.vertices.push_back({id, delta_eq(alpha, 2)});
  if (e.kind == EdgeId::Kind::kInternal) {
    const InternalEdge old = parts.internal[e.index];
    parts.internal[e.index] = {old.a, {id, 0}};
    parts.internal.push_back({{id, 1}, old.b});
  } else {
    const PortRef at = parts.dangling[e.index].at;
    parts.internal.push_back({at, {id, 0}});
    parts.dangling[e.index].at = {id, 1};
  }
  return parts.build();
}

NFG equality_delete(const NFG& g, const std::string& v, Tolerance tol) {
  const LocalFunction& f = g.function(v);
  if (f.arity() != 2 || !(f.port(0) == f.port(1)) ||
      !approx_equal(f.values(), delta_eq(f.port(0), 2).values(), tol)) {
    throw Error(ErrorCode::kNotDeltaEq, "vertex " + v + " is not a binary equality indicator");
  }
  return splice_out(g, {v}, {v, 0}, {v, 1});
}

bool dual_pair_check(const LocalFunction& phi, const LocalFunction& phihat, size_t phi_coupling,
                     size_t phihat_coupling, Tolerance tol) {
  if (phi.arity() != 2 || phihat.arity() != 2) {
    throw Error(ErrorCode::kArityMismatch, "dual pair functions must be bivariate");
  }
  if (phi_coupling > 1 || phihat_coupling > 1) {
    throw Error(ErrorCode::kBadPortIndex, "coupling port must be 0 or 1");
  }
  if (!(phi.port(phi_coupling) == phihat.port(phihat_coupling))) {
    throw Error(ErrorCode::kAlphabetMismatch, "coupling ports carry different alphabets");
  }
  const Alphabet& x = phi.port(1 - phi_coupling);
  if (!(x == phihat.port(1 - phihat_coupling))) {
    throw Error(ErrorCode::kAlphabetMismatch, "non-coupling ports carry different alphabets");
  }
  const PortPair pairing{phi_coupling, phihat_coupling};
  const LocalFunction prod = contract_pair(phi, phihat, std::span(&pairing, 1));
  return approx_equal(prod.values(), delta_eq(x, 2).values(), tol);
}

NFG dual_vertex_insert(const NFG& g, EdgeId e, const DualPair& pair, Tolerance tol) {
  if (!dual_pair_check(pair.phi, pair.phihat, pair.phi_coupling, pair.phihat_coupling, tol)) {
    throw Error(ErrorCode::kDualPairFailure, "supplied functions are not a dual pair");
  }
  const size_t px = 1 - pair.phi_coupling;
  const size_t qx = 1 - pair.phihat_coupling;
  if (!(pair.phi.port(px) == g.alphabet(e))) {
    throw Error(ErrorCode::kAlphabetMismatch, "dual pair alphabet " + pair.phi.port(px).to_string() +
                                                  " does not match edge alphabet " +
                                                  g.alphabet(e).to_string());
  }
  const std::string p = g.fresh_id("phi");
  const std::string q = g.fresh_id("phihat");
  Parts parts(g);
  parts.vertices.push_back({p, pair.phi});
  parts.vertices.push_back({q, pair.phihat});
  const InternalEdge coupling{{p, pair.phi_coupling}, {q, pair.phihat_coupling}};
  if (e.kind == EdgeId::Kind::kInternal) {
    const InternalEdge old = parts.internal[e.index];
    parts.internal[e.index] = {old.a, {p, px}};
    parts.internal.push_back(coupling);
    parts.internal.push_back({{q, qx}, old.b});
  } else {
    const PortRef at = parts.dangling[e.index].at;
    parts.internal.push_back({at, {p, px}});
    parts.internal.push_back(coupling);
    parts.dangling[e.index].at = {q, qx};
  }
  return parts.build();
}

NFG dual_vertex_delete(const NFG& g, const std::string& v1, const std::string& v2, Tolerance tol) {
  const LocalFunction& f1 = g.function(v1);
  const LocalFunction& f2 = g.function(v2);
  if (v1 == v2) throw Error(ErrorCode::kInvalidArgument, "dual pair needs two distinct vertices");
  if (f1.arity() != 2 || f2.arity() != 2) {
    throw Error(ErrorCode::kArityMismatch, "dual pair vertices must be bivariate");
  }
  std::vector<std::pair<size_t, size_t>> links;
  for (size_t p = 0; p < 2; ++p) {
    const Endpoint ep = g.endpoint({v1, p});
    if (ep.peer && ep.peer->vertex == v2) links.emplace_back(p, ep.peer->port);
  }
  if (links.size() != 1) {
    throw Error(ErrorCode::kNotAdjacent, v1 + " and " + v2 + " share " + std::to_string(links.size()) +
                                             " edges, expected exactly one coupling edge");
  }
  const auto [c1, c2] = links.front();
  if (!dual_pair_check(f1, f2, c1, c2, tol)) {
    throw Error(ErrorCode::kDualPairFailure, v1 + " and " + v2 + " are not a dual pair");
  }
  return splice_out(g, {v1, v2}, {v1, 1 - c1}, {v2, 1 - c2});
}

}  // namespace nfg
