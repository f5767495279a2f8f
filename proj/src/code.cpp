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

#include "nfg/code.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <unordered_set>

#include "nfg/duality.hpp"
#include "nfg/error.hpp"

namespace nfg {
namespace {

// Mixed-radix addition on flat indices, last factor fastest.
size_t add_index(const std::vector<int>& orders, size_t a, size_t b) {
  size_t out = 0;
  size_t weight = 1;
  for (size_t k = orders.size(); k-- > 0;) {
    const auto n = static_cast<size_t>(orders[k]);
    out += ((a % n + b % n) % n) * weight;
    a /= n;
    b /= n;
    weight *= n;
  }
  return out;
}

// Generators of the subgroup spanned by `indices`, checking along the way that
// the span never leaves the set. Throws kInvalidCode if it does.
std::vector<size_t> subgroup_generators(const std::vector<int>& orders, const std::vector<size_t>& indices) {
  auto member = [&](size_t x) { return std::binary_search(indices.begin(), indices.end(), x); };
  if (!member(0)) throw Error(ErrorCode::kInvalidCode, "code does not contain the zero word");
  std::unordered_set<size_t> span{0};
  std::vector<size_t> gens;
  for (size_t c : indices) {
    if (span.count(c)) continue;
    gens.push_back(c);
    std::vector<size_t> base(span.begin(), span.end());
    for (size_t mult = c; mult != 0; mult = add_index(orders, mult, c)) {
      for (size_t s : base) {
        const size_t t = add_index(orders, s, mult);
        if (!member(t)) throw Error(ErrorCode::kInvalidCode, "code is not closed under addition");
        span.insert(t);
      }
    }
  }
  return gens;
}

}  // namespace

void GroupCode::init_flat() {
  flat_ = FiniteAbelianGroup();
  for (const auto& g : ambient_) flat_ = direct_product(flat_, g);
}

void GroupCode::check_subgroup() const { (void)subgroup_generators(flat_.orders(), indices_); }

GroupCode::GroupCode(std::vector<FiniteAbelianGroup> ambient, const std::vector<Codeword>& codewords)
    : ambient_(std::move(ambient)) {
  init_flat();
  for (const auto& w : codewords) {
    if (w.size() != ambient_.size()) {
      throw Error(ErrorCode::kInvalidCode, "codeword has " + std::to_string(w.size()) + " symbols, code length is " +
                                               std::to_string(ambient_.size()));
    }
    std::vector<int> residues;
    for (size_t k = 0; k < w.size(); ++k) {
      const auto& orders = ambient_[k].orders();
      if (w[k].residues.size() != orders.size()) {
        throw Error(ErrorCode::kInvalidCode, "symbol " + std::to_string(k) + " has the wrong rank");
      }
      for (size_t j = 0; j < orders.size(); ++j) {
        const int r = w[k].residues[j];
        if (r < 0 || r >= orders[j]) {
          throw Error(ErrorCode::kInvalidCode, "symbol " + std::to_string(k) + " outside " + ambient_[k].to_string());
        }
        residues.push_back(r);
      }
    }
    indices_.push_back(flat_.index_of(GroupElement{residues}));
  }
  std::sort(indices_.begin(), indices_.end());
  indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
  check_subgroup();
}

GroupCode GroupCode::from_indices(std::vector<FiniteAbelianGroup> ambient, std::vector<size_t> indices) {
  GroupCode c;
  c.ambient_ = std::move(ambient);
  c.init_flat();
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  if (!indices.empty() && indices.back() >= c.flat_.size()) {
    throw Error(ErrorCode::kInvalidCode, "codeword index out of range");
  }
  c.indices_ = std::move(indices);
  c.check_subgroup();
  return c;
}

GroupCode GroupCode::from_generators(std::vector<FiniteAbelianGroup> ambient, const std::vector<Codeword>& generators) {
  GroupCode probe;
  probe.ambient_ = ambient;
  probe.init_flat();
  std::vector<size_t> gen_idx;
  for (const auto& w : generators) {
    std::vector<int> residues;
    if (w.size() != probe.ambient_.size()) throw Error(ErrorCode::kInvalidCode, "generator has the wrong length");
    for (size_t k = 0; k < w.size(); ++k) {
      const FiniteAbelianGroup& g = probe.ambient_[k];
      if (w[k].residues.size() != g.rank()) throw Error(ErrorCode::kInvalidCode, "generator symbol has the wrong rank");
      const GroupElement e = g.make(w[k].residues);
      residues.insert(residues.end(), e.residues.begin(), e.residues.end());
    }
    gen_idx.push_back(probe.flat_.index_of(GroupElement{residues}));
  }
  const auto& orders = probe.flat_.orders();
  std::unordered_set<size_t> span{0};
  for (size_t c : gen_idx) {
    if (span.count(c)) continue;
    std::vector<size_t> base(span.begin(), span.end());
    for (size_t mult = c; mult != 0; mult = add_index(orders, mult, c)) {
      for (size_t s : base) span.insert(add_index(orders, s, mult));
    }
  }
  return from_indices(std::move(ambient), std::vector<size_t>(span.begin(), span.end()));
}

GroupCode GroupCode::repetition(size_t length, int q) {
  std::vector<FiniteAbelianGroup> ambient(length, FiniteAbelianGroup({q}));
  Codeword ones(length, GroupElement{{1}});
  return from_generators(std::move(ambient), {ones});
}

GroupCode GroupCode::hamming74() {
  const int g[4][7] = {{1, 0, 0, 0, 1, 1, 0},
                       {0, 1, 0, 0, 1, 0, 1},
                       {0, 0, 1, 0, 0, 1, 1},
                       {0, 0, 0, 1, 1, 1, 1}};
  std::vector<Codeword> rows;
  for (const auto& r : g) {
    Codeword w;
    for (int b : r) w.push_back(GroupElement{{b}});
    rows.push_back(std::move(w));
  }
  return from_generators(std::vector<FiniteAbelianGroup>(7, FiniteAbelianGroup({2})), rows);
}

GroupCode GroupCode::full(std::vector<FiniteAbelianGroup> ambient) {
  GroupCode c;
  c.ambient_ = std::move(ambient);
  c.init_flat();
  c.indices_.resize(c.flat_.size());
  std::iota(c.indices_.begin(), c.indices_.end(), size_t{0});
  return c;
}

GroupCode GroupCode::zero(std::vector<FiniteAbelianGroup> ambient) {
  return from_indices(std::move(ambient), {0});
}

std::vector<Alphabet> GroupCode::alphabets() const {
  std::vector<Alphabet> out;
  for (const auto& g : ambient_) out.push_back(Alphabet::grouped(g));
  return out;
}

double GroupCode::ambient_size() const { return static_cast<double>(flat_.size()); }

bool GroupCode::contains(size_t index) const {
  return std::binary_search(indices_.begin(), indices_.end(), index);
}

Codeword GroupCode::codeword(size_t index) const {
  const GroupElement e = flat_.element_at(index);
  Codeword w;
  size_t pos = 0;
  for (const auto& g : ambient_) {
    w.push_back(GroupElement{std::vector<int>(e.residues.begin() + static_cast<long>(pos),
                                              e.residues.begin() + static_cast<long>(pos + g.rank()))});
    pos += g.rank();
  }
  return w;
}

std::vector<Codeword> GroupCode::codewords() const {
  std::vector<Codeword> out;
  for (size_t i : indices_) out.push_back(codeword(i));
  return out;
}

LocalFunction code_indicator(const GroupCode& c) {
  LocalFunction z = LocalFunction::zeros(c.alphabets());
  std::vector<Scalar> v = z.values();
  for (size_t i : c.indices()) v[i] = 1.0;
  return LocalFunction(c.alphabets(), std::move(v));
}

namespace {
std::string format_count(double n) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.0f", n);
  return buf;
}
}  // namespace

GroupCode dual_code_brute(const GroupCode& c, double cap) {
  if (c.ambient_size() > cap) {
    throw Error(ErrorCode::kCapExceeded, "ambient space " + format_count(c.ambient_size()) + " exceeds cap " +
                                             format_count(cap));
  }
  FiniteAbelianGroup flat;
  for (const auto& g : c.ambient()) flat = direct_product(flat, g);
  const auto& orders = flat.orders();
  long long lcm = 1;
  for (int n : orders) lcm = std::lcm(lcm, static_cast<long long>(n));
  // kappa(c, xhat) = 1 iff sum_k c_k xhat_k (L / n_k) = 0 mod L; checking the
  // generators suffices because kappa(., xhat) is a character.
  std::vector<std::vector<long long>> weights;
  for (size_t gi : subgroup_generators(orders, c.indices())) {
    const GroupElement e = flat.element_at(gi);
    std::vector<long long> w(orders.size());
    for (size_t k = 0; k < orders.size(); ++k) w[k] = e.residues[k] * (lcm / orders[k]);
    weights.push_back(std::move(w));
  }
  const size_t n = flat.size();
  std::vector<char> in(n, 0);
  const long nn = static_cast<long>(n);
#pragma omp parallel for schedule(static)
  for (long x = 0; x < nn; ++x) {
    std::vector<long long> digits(orders.size());
    size_t rest = static_cast<size_t>(x);
    for (size_t k = orders.size(); k-- > 0;) {
      digits[k] = static_cast<long long>(rest % static_cast<size_t>(orders[k]));
      rest /= static_cast<size_t>(orders[k]);
    }
    bool ok = true;
    for (const auto& w : weights) {
      long long s = 0;
      for (size_t k = 0; k < orders.size(); ++k) s = (s + w[k] * digits[k]) % lcm;
      if (s != 0) {
        ok = false;
        break;
      }
    }
    in[static_cast<size_t>(x)] = ok;
  }
  std::vector<size_t> idx;
  for (size_t x = 0; x < n; ++x)
    if (in[x]) idx.push_back(x);
  return GroupCode::from_indices(c.ambient(), std::move(idx));
}

NFG code_nfg(const GroupCode& c) {
  std::vector<DanglingEdge> dangling;
  for (size_t k = 0; k < c.length(); ++k) dangling.push_back({{"C", k}, "x" + std::to_string(k)});
  return NFG::build({Vertex{"C", code_indicator(c)}}, {}, std::move(dangling));
}

namespace {

std::vector<size_t> support(const LocalFunction& z) {
  const double thr = 1e-9 * max_abs(z.values());
  std::vector<size_t> s;
  for (size_t i = 0; i < z.size(); ++i)
    if (std::abs(z[i]) > thr) s.push_back(i);
  return s;
}

}  // namespace

CodeDualityReport verify_code_duality(const NFG& g, const GroupCode& claimed, Tolerance tol,
                                      const EvalOptions& opts) {
  for (const auto& v : g.vertices()) {
    for (const Scalar z : v.function.values()) {
      if (std::abs(z) > 1e-12 && std::abs(z - 1.0) > 1e-12) {
        throw Error(ErrorCode::kNotIndicator, "local function " + v.id + " takes value " + format_scalar(z));
      }
    }
  }
  const LocalFunction z = eval_exterior(g, EvalMode::kEliminate, opts);
  if (!(z.ports() == claimed.alphabets())) {
    throw Error(ErrorCode::kAlphabetMismatch, "exterior ports do not match the code's ambient groups");
  }
  if (max_abs(z.values()) == 0.0) throw Error(ErrorCode::kNotIndicator, "exterior function vanishes");
  if (support(z) != claimed.indices()) {
    throw Error(ErrorCode::kSupportMismatch, "exterior support has " + std::to_string(support(z).size()) +
                                                 " words, claimed code has " + std::to_string(claimed.size()));
  }
  CodeDualityReport r;
  const Scalar s = z[claimed.indices().front()];
  for (size_t i : claimed.indices()) {
    if (!approx_equal(z[i], s, tol)) {
      throw Error(ErrorCode::kNotIndicator, "scale differs across codewords: " + format_scalar(s) + " vs " +
                                                format_scalar(z[i]));
    }
  }
  r.scale = s.real();
  r.code_size = claimed.size();

  const GroupCode perp = dual_code_brute(claimed);
  r.dual_size = perp.size();
  const LocalFunction zd = eval_exterior(dualize(g), EvalMode::kEliminate, opts);
  if (support(zd) != perp.indices()) {
    throw Error(ErrorCode::kSupportMismatch, "dual exterior support has " + std::to_string(support(zd).size()) +
                                                 " words, dual code has " + std::to_string(perp.size()));
  }
  r.dual_scale = zd[perp.indices().front()].real();
  r.predicted_dual_scale = g.internal_configuration_count() * static_cast<double>(claimed.size()) * r.scale;
  std::vector<Scalar> expected(zd.size(), 0.0);
  for (size_t i : perp.indices()) expected[i] = r.predicted_dual_scale;
  r.max_deviation = relative_deviation(zd.values(), expected);
  r.ok = approx_equal(zd.values(), expected, tol);
  return r;
}

}  // namespace nfg
