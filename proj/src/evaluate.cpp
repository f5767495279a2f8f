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

#include "nfg/evaluate.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>

#include "nfg/error.hpp"
#include "nfg/kernels.hpp"

namespace nfg {
namespace {

// Configuration counts are doubles (they may overflow size_t); print them
// without the trailing ".000000".
std::string count_string(double n) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.0f", n);
  return buf;
}

// Edge labels used during evaluation: internal edge i -> i, dangling edge j ->
// n_internal + j.
size_t label_of(const NFG& g, EdgeId e) {
  return e.kind == EdgeId::Kind::kInternal ? e.index : g.internal_edges().size() + e.index;
}

std::vector<size_t> vertex_labels(const NFG& g, const Vertex& v) {
  std::vector<size_t> labels;
  for (size_t p = 0; p < v.function.arity(); ++p) {
    labels.push_back(label_of(g, g.endpoint({v.id, p}).edge));
  }
  return labels;
}

kernels::SumOfProducts brute_problem(const NFG& g, const EvalOptions& opts) {
  const size_t n_int = g.internal_edges().size();
  const size_t n_ext = g.dangling_edges().size();
  kernels::SumOfProducts prob;
  prob.n_outer = n_ext;
  prob.radices.resize(n_int + n_ext);
  double space = 1.0;
  for (size_t j = 0; j < n_ext; ++j) {
    prob.radices[j] = g.alphabet(EdgeId::dangling(j)).size();
    space *= static_cast<double>(prob.radices[j]);
  }
  for (size_t i = 0; i < n_int; ++i) {
    prob.radices[n_ext + i] = g.alphabet(EdgeId::internal(i)).size();
    space *= static_cast<double>(prob.radices[n_ext + i]);
  }
  if (space > opts.brute_cap) {
    throw Error(ErrorCode::kCapExceeded, "brute configuration space " + count_string(space) +
                                             " exceeds cap " + count_string(opts.brute_cap));
  }
  for (const auto& v : g.vertices()) {
    kernels::FactorView fv;
    fv.values = v.function.values();
    fv.strides = v.function.strides();
    for (size_t p = 0; p < v.function.arity(); ++p) {
      const EdgeId e = g.endpoint({v.id, p}).edge;
      fv.slots.push_back(e.kind == EdgeId::Kind::kDangling ? e.index : n_ext + e.index);
    }
    prob.factors.push_back(std::move(fv));
  }
  return prob;
}

struct Piece {
  LocalFunction f;
  std::vector<size_t> labels;
};

size_t result_size(const std::vector<size_t>& labels, const std::vector<Alphabet>& label_alpha) {
  size_t n = 1;
  for (size_t l : labels) n *= label_alpha[l].size();
  return n;
}

// Labels that survive joining a and b (or tracing a when b is null): every
// label not appearing exactly twice across the operands.
std::vector<size_t> surviving(const std::vector<size_t>& a, const std::vector<size_t>* b) {
  std::vector<size_t> all = a;
  if (b) all.insert(all.end(), b->begin(), b->end());
  std::vector<size_t> out;
  for (size_t l : all) {
    if (std::count(all.begin(), all.end(), l) == 1) out.push_back(l);
  }
  return out;
}

std::vector<Alphabet> label_alphabets(const NFG& g) {
  std::vector<Alphabet> out;
  for (size_t i = 0; i < g.internal_edges().size(); ++i) out.push_back(g.alphabet(EdgeId::internal(i)));
  for (size_t j = 0; j < g.dangling_edges().size(); ++j) out.push_back(g.alphabet(EdgeId::dangling(j)));
  return out;
}

void check_cap(size_t size, const EvalOptions& opts) {
  if (size > opts.tensor_cap) {
    throw Error(ErrorCode::kCapExceeded, "intermediate tensor of " + std::to_string(size) +
                                             " entries exceeds cap " + std::to_string(opts.tensor_cap));
  }
}

Piece trace_piece(const Piece& p) {
  std::vector<PortPair> pairs;
  for (size_t i = 0; i < p.labels.size(); ++i) {
    for (size_t j = i + 1; j < p.labels.size(); ++j) {
      if (p.labels[i] == p.labels[j]) pairs.emplace_back(i, j);
    }
  }
  if (pairs.empty()) return p;
  return Piece{trace(p.f, pairs), surviving(p.labels, nullptr)};
}

Piece join_pieces(const Piece& a, const Piece& b) {
  std::vector<PortPair> pairing;
  std::vector<bool> b_used(b.labels.size());
  for (size_t i = 0; i < a.labels.size(); ++i) {
    for (size_t j = 0; j < b.labels.size(); ++j) {
      if (!b_used[j] && a.labels[i] == b.labels[j]) {
        pairing.emplace_back(i, j);
        b_used[j] = true;
        break;
      }
    }
  }
  std::vector<size_t> labels;
  std::vector<bool> a_used(a.labels.size());
  for (auto [i, j] : pairing) a_used[i] = true;
  for (size_t i = 0; i < a.labels.size(); ++i)
    if (!a_used[i]) labels.push_back(a.labels[i]);
  for (size_t j = 0; j < b.labels.size(); ++j)
    if (!b_used[j]) labels.push_back(b.labels[j]);
  return Piece{contract_pair(a.f, b.f, pairing), std::move(labels)};
}

}  // namespace

LocalFunction eval_brute(const NFG& g, const EvalOptions& opts) {
  const auto prob = brute_problem(g, opts);
  return LocalFunction(g.external_alphabets(), kernels::sum_of_products(prob));
}

LocalFunction eval_brute_serial(const NFG& g, const EvalOptions& opts) {
  const auto prob = brute_problem(g, opts);
  return LocalFunction(g.external_alphabets(), kernels::serial::sum_of_products(prob));
}

LocalFunction eval_eliminate(const NFG& g, std::span<const size_t> order, const EvalOptions& opts) {
  const size_t n_int = g.internal_edges().size();
  {
    std::vector<int> seen(n_int, 0);
    for (size_t e : order) {
      if (e >= n_int) {
        throw Error(ErrorCode::kInvalidEliminationOrder, "edge " + std::to_string(e) + " does not exist");
      }
      if (seen[e]++) {
        throw Error(ErrorCode::kInvalidEliminationOrder, "edge " + std::to_string(e) + " listed twice");
      }
    }
    for (size_t e = 0; e < n_int; ++e) {
      if (!seen[e]) {
        throw Error(ErrorCode::kInvalidEliminationOrder, "edge " + std::to_string(e) + " missing");
      }
    }
  }
  const auto label_alpha = label_alphabets(g);

  std::vector<Piece> pieces;
  for (const auto& v : g.vertices()) pieces.push_back(Piece{v.function, vertex_labels(g, v)});

  std::vector<bool> done(n_int, false);
  for (size_t e : order) {
    if (done[e]) continue;
    std::vector<size_t> holders;
    for (size_t k = 0; k < pieces.size(); ++k) {
      if (std::find(pieces[k].labels.begin(), pieces[k].labels.end(), e) != pieces[k].labels.end()) {
        holders.push_back(k);
      }
    }
    Piece merged;
    if (holders.size() == 1) {
      const Piece& p = pieces[holders[0]];
      check_cap(result_size(surviving(p.labels, nullptr), label_alpha), opts);
      merged = trace_piece(p);
    } else {
      const Piece& a = pieces[holders[0]];
      const Piece& b = pieces[holders[1]];
      check_cap(result_size(surviving(a.labels, &b.labels), label_alpha), opts);
      merged = join_pieces(trace_piece(a), trace_piece(b));
    }
    // Everything summed by this step is finished.
    std::vector<size_t> before = pieces[holders[0]].labels;
    if (holders.size() == 2) {
      before.insert(before.end(), pieces[holders[1]].labels.begin(), pieces[holders[1]].labels.end());
    }
    for (size_t l : before) {
      if (l < n_int && std::find(merged.labels.begin(), merged.labels.end(), l) == merged.labels.end()) {
        done[l] = true;
      }
    }
    pieces[holders[0]] = std::move(merged);
    if (holders.size() == 2) pieces.erase(pieces.begin() + static_cast<long>(holders[1]));
  }

  // Remaining pieces only carry dangling labels; tensor them together.
  Piece acc{LocalFunction::scalar(1.0), {}};
  for (const auto& p : pieces) {
    check_cap(acc.f.size() * p.f.size(), opts);
    acc = Piece{contract_pair(acc.f, p.f, {}), [&] {
                  auto l = acc.labels;
                  l.insert(l.end(), p.labels.begin(), p.labels.end());
                  return l;
                }()};
  }
  std::vector<size_t> perm(acc.labels.size());
  for (size_t k = 0; k < acc.labels.size(); ++k) {
    const size_t want = n_int + k;
    perm[k] = static_cast<size_t>(std::find(acc.labels.begin(), acc.labels.end(), want) - acc.labels.begin());
  }
  return permute(acc.f, perm);
}

std::vector<size_t> default_elimination_order(const NFG& g) {
  const size_t n_int = g.internal_edges().size();
  const auto label_alpha = label_alphabets(g);
  std::vector<std::vector<size_t>> pieces;
  for (const auto& v : g.vertices()) pieces.push_back(vertex_labels(g, v));

  std::vector<bool> done(n_int, false);
  std::vector<size_t> order;
  while (order.size() < n_int) {
    size_t best_edge = n_int;
    size_t best_size = std::numeric_limits<size_t>::max();
    std::vector<size_t> best_holders;
    for (size_t e = 0; e < n_int; ++e) {
      if (done[e]) continue;
      std::vector<size_t> holders;
      for (size_t k = 0; k < pieces.size(); ++k) {
        if (std::find(pieces[k].begin(), pieces[k].end(), e) != pieces[k].end()) holders.push_back(k);
      }
      const auto labels = holders.size() == 1 ? surviving(pieces[holders[0]], nullptr)
                                              : surviving(pieces[holders[0]], &pieces[holders[1]]);
      const size_t sz = result_size(labels, label_alpha);
      if (sz < best_size) {
        best_size = sz;
        best_edge = e;
        best_holders = holders;
      }
    }
    // Contracting best_edge also finishes any parallel edges between the
    // same pieces; list them right after it.
    std::vector<size_t> all = pieces[best_holders[0]];
    if (best_holders.size() == 2) all.insert(all.end(), pieces[best_holders[1]].begin(), pieces[best_holders[1]].end());
    const auto merged = best_holders.size() == 1 ? surviving(pieces[best_holders[0]], nullptr)
                                                 : surviving(pieces[best_holders[0]], &pieces[best_holders[1]]);
    order.push_back(best_edge);
    done[best_edge] = true;
    for (size_t l : all) {
      if (l < n_int && !done[l] && std::find(merged.begin(), merged.end(), l) == merged.end()) {
        order.push_back(l);
        done[l] = true;
      }
    }
    pieces[best_holders[0]] = merged;
    if (best_holders.size() == 2) pieces.erase(pieces.begin() + static_cast<long>(best_holders[1]));
  }
  return order;
}

LocalFunction eval_exterior(const NFG& g, EvalMode mode, const EvalOptions& opts) {
  if (mode == EvalMode::kBrute) return eval_brute(g, opts);
  const auto order = default_elimination_order(g);
  return eval_eliminate(g, order, opts);
}

}  // namespace nfg
