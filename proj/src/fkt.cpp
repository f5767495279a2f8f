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

#include "nfg/fkt.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>

#include "nfg/error.hpp"
#include "nfg/pfaffian.hpp"

namespace nfg {
namespace {

size_t tail(const WeightedGraph& h, size_t dart) {
  const auto& e = h.edges()[dart / 2];
  return dart % 2 ? e.v : e.u;
}

size_t head(const WeightedGraph& h, size_t dart) {
  const auto& e = h.edges()[dart / 2];
  return dart % 2 ? e.u : e.v;
}

// Connected component label per vertex, labels in order of lowest vertex.
std::vector<size_t> components(const WeightedGraph& h, size_t* count) {
  const size_t n = h.vertex_count();
  std::vector<size_t> parent(n);
  std::iota(parent.begin(), parent.end(), size_t{0});
  auto find = [&](size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : h.edges()) parent[find(e.u)] = find(e.v);
  std::vector<size_t> label(n, n);
  std::vector<size_t> root_label(n, n);
  size_t next = 0;
  for (size_t v = 0; v < n; ++v) {
    const size_t r = find(v);
    if (root_label[r] == n) root_label[r] = next++;
    label[v] = root_label[r];
  }
  *count = next;
  return label;
}

}  // namespace

FaceStructure trace_faces(const WeightedGraph& h, const PlanarEmbedding& emb) {
  const size_t n = h.vertex_count();
  const auto& edges = h.edges();
  if (emb.rotation.size() != n) {
    throw Error(ErrorCode::kInvalidEmbedding, "rotation lists " + std::to_string(emb.rotation.size()) +
                                                  " vertices, graph has " + std::to_string(n));
  }
  // pos[2e] = position of e in rotation[u], pos[2e+1] = in rotation[v].
  std::vector<size_t> pos(2 * edges.size(), SIZE_MAX);
  for (size_t v = 0; v < n; ++v) {
    auto listed = emb.rotation[v];
    auto actual = h.incident(v);
    std::sort(listed.begin(), listed.end());
    if (listed != actual) {
      throw Error(ErrorCode::kInvalidEmbedding, "rotation at vertex " + std::to_string(v) +
                                                    " does not list exactly its incident edges");
    }
    for (size_t k = 0; k < emb.rotation[v].size(); ++k) {
      const size_t e = emb.rotation[v][k];
      pos[2 * e + (edges[e].u == v ? 0 : 1)] = k;
    }
  }

  FaceStructure fs;
  fs.face_of_dart.assign(2 * edges.size(), SIZE_MAX);
  for (size_t start = 0; start < 2 * edges.size(); ++start) {
    if (fs.face_of_dart[start] != SIZE_MAX) continue;
    std::vector<size_t> face;
    size_t d = start;
    do {
      fs.face_of_dart[d] = fs.faces.size();
      face.push_back(d);
      const size_t w = head(h, d);
      const size_t e = d / 2;
      const auto& rot = emb.rotation[w];
      const size_t p = pos[2 * e + (edges[e].u == w ? 0 : 1)];
      const size_t e2 = rot[(p + 1) % rot.size()];
      d = 2 * e2 + (edges[e2].u == w ? 0 : 1);
    } while (d != start);
    fs.faces.push_back(std::move(face));
  }

  size_t nc = 0;
  const auto comp = components(h, &nc);
  std::vector<long> euler(nc, 0);
  std::vector<bool> has_edges(nc, false);
  for (size_t v = 0; v < n; ++v) euler[comp[v]] += 1;
  for (const auto& e : edges) {
    euler[comp[e.u]] -= 1;
    has_edges[comp[e.u]] = true;
  }
  for (const auto& f : fs.faces) euler[comp[tail(h, f[0])]] += 1;
  for (size_t c = 0; c < nc; ++c) {
    if (!has_edges[c]) euler[c] += 1;  // an isolated vertex bounds one face
    if (euler[c] != 2) {
      throw Error(ErrorCode::kInvalidEmbedding,
                  "Euler characteristic " + std::to_string(euler[c]) + " in component " + std::to_string(c));
    }
  }
  return fs;
}

std::vector<bool> pfaffian_orientation(const WeightedGraph& h, const PlanarEmbedding& emb) {
  const FaceStructure fs = trace_faces(h, emb);
  const size_t n = h.vertex_count();
  const auto& edges = h.edges();
  std::vector<bool> orient(edges.size(), false);
  std::vector<bool> fixed(edges.size(), false);
  std::vector<bool> in_tree(edges.size(), false);

  // Spanning forest, tree edges pointing from the lower vertex.
  std::vector<bool> seen(n, false);
  for (size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::queue<size_t> q;
    q.push(s);
    seen[s] = true;
    while (!q.empty()) {
      const size_t v = q.front();
      q.pop();
      for (size_t e : emb.rotation[v]) {
        const size_t w = edges[e].u == v ? edges[e].v : edges[e].u;
        if (seen[w]) continue;
        seen[w] = true;
        in_tree[e] = true;
        orient[e] = edges[e].u < edges[e].v;
        fixed[e] = true;
        q.push(w);
      }
    }
  }

  // The remaining edges span the dual graph; walk it from the first face of
  // each component and fix faces leaves-first.
  const size_t nf = fs.faces.size();
  std::vector<size_t> parent_edge(nf, SIZE_MAX);
  std::vector<bool> reached(nf, false);
  std::vector<size_t> order;
  for (size_t root = 0; root < nf; ++root) {
    if (reached[root]) continue;
    reached[root] = true;
    std::queue<size_t> q;
    q.push(root);
    while (!q.empty()) {
      const size_t f = q.front();
      q.pop();
      order.push_back(f);
      for (size_t d : fs.faces[f]) {
        if (in_tree[d / 2]) continue;
        const size_t g = fs.face_of_dart[d ^ 1];
        if (g == f) {
          throw Error(ErrorCode::kOrientationFailure, "non-tree edge " + std::to_string(d / 2) + " borders one face");
        }
        if (reached[g]) continue;
        reached[g] = true;
        parent_edge[g] = d / 2;
        q.push(g);
      }
    }
  }
  for (size_t k = order.size(); k-- > 0;) {
    const size_t f = order[k];
    const size_t p = parent_edge[f];
    if (p == SIZE_MAX) continue;
    size_t forward = 0;
    size_t parent_dart = SIZE_MAX;
    for (size_t d : fs.faces[f]) {
      if (d / 2 == p) {
        parent_dart = d;
        continue;
      }
      if (!fixed[d / 2]) {
        throw Error(ErrorCode::kOrientationFailure, "edge " + std::to_string(d / 2) + " unoriented at its turn");
      }
      forward += orient[d / 2] == (d % 2 == 0);
    }
    const bool dart_forward = forward % 2 == 0;
    orient[p] = dart_forward == (parent_dart % 2 == 0);
    fixed[p] = true;
  }
  for (size_t e = 0; e < edges.size(); ++e) {
    if (!fixed[e]) throw Error(ErrorCode::kOrientationFailure, "edge " + std::to_string(e) + " never oriented");
  }
  return orient;
}

Eigen::MatrixXcd oriented_skew_matrix(const WeightedGraph& h, const std::vector<bool>& orientation,
                                      bool unit_weights) {
  const auto n = static_cast<Eigen::Index>(h.vertex_count());
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(n, n);
  for (size_t e = 0; e < h.edges().size(); ++e) {
    const auto& ed = h.edges()[e];
    const Scalar w = unit_weights ? Scalar(1.0) : ed.w;
    const auto from = static_cast<Eigen::Index>(orientation[e] ? ed.u : ed.v);
    const auto to = static_cast<Eigen::Index>(orientation[e] ? ed.v : ed.u);
    a(from, to) = w;
    a(to, from) = -w;
  }
  return a;
}

Scalar fkt_perfmatch(const WeightedGraph& h, const PlanarEmbedding& emb) {
  const auto orient = pfaffian_orientation(h, emb);
  const size_t n = h.vertex_count();
  if (n == 0) return 1.0;
  size_t nc = 0;
  const auto comp = components(h, &nc);
  std::vector<std::vector<Eigen::Index>> members(nc);
  for (size_t v = 0; v < n; ++v) members[comp[v]].push_back(static_cast<Eigen::Index>(v));
  for (const auto& m : members)
    if (m.size() % 2) return 0.0;

  const Eigen::MatrixXcd weighted = oriented_skew_matrix(h, orient, false);
  const Eigen::MatrixXcd unit = oriented_skew_matrix(h, orient, true);
  Scalar result = 1.0;
  for (const auto& m : members) {
    const auto k = static_cast<Eigen::Index>(m.size());
    Eigen::MatrixXcd sw(k, k), su(k, k);
    for (Eigen::Index i = 0; i < k; ++i) {
      for (Eigen::Index j = 0; j < k; ++j) {
        sw(i, j) = weighted(m[static_cast<size_t>(i)], m[static_cast<size_t>(j)]);
        su(i, j) = unit(m[static_cast<size_t>(i)], m[static_cast<size_t>(j)]);
      }
    }
    const Scalar count = pfaffian(su);
    if (std::abs(count) < 0.5) return 0.0;  // no perfect matching at all
    const double sign = count.real() > 0 ? 1.0 : -1.0;
    result *= sign * pfaffian(sw);
  }
  return result;
}

}  // namespace nfg
