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

#include "nfg/tensor.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "nfg/error.hpp"
#include "nfg/kernels.hpp"

namespace nfg {

Alphabet Alphabet::plain(size_t size) {
  if (size < 1) throw Error(ErrorCode::kInvalidArgument, "alphabet size must be >= 1");
  return Alphabet(size, std::nullopt);
}

Alphabet Alphabet::grouped(FiniteAbelianGroup group) {
  const size_t n = group.size();
  return Alphabet(n, std::move(group));
}

Alphabet Alphabet::parse(std::string_view literal) {
  size_t first = 0;
  while (first < literal.size() &&
         std::isspace(static_cast<unsigned char>(literal[first])))
    ++first;
  literal.remove_prefix(first);
  if (!literal.empty() && std::isdigit(static_cast<unsigned char>(literal[0]))) {
    size_t n = 0;
    auto [ptr, ec] = std::from_chars(literal.data(), literal.data() + literal.size(), n);
    if (ec != std::errc() || ptr != literal.data() + literal.size()) {
      throw Error(ErrorCode::kParseError, "bad alphabet literal '" + std::string(literal) + "'");
    }
    return plain(n);
  }
  return grouped(FiniteAbelianGroup::parse(literal));
}

const FiniteAbelianGroup& Alphabet::group() const {
  if (!group_) {
    throw Error(ErrorCode::kNotGroupAlphabet,
                "plain alphabet of size " + std::to_string(size_) + " has no group structure");
  }
  return *group_;
}

std::string Alphabet::to_string() const {
  return group_ ? group_->to_string() : std::to_string(size_);
}

size_t product_size(std::span<const Alphabet> ports) {
  size_t n = 1;
  for (const auto& a : ports) n *= a.size();
  return n;
}

LocalFunction::LocalFunction(std::vector<Alphabet> ports, std::vector<Scalar> values)
    : ports_(std::move(ports)), values_(std::move(values)) {
  const size_t expected = product_size(ports_);
  if (values_.size() != expected) {
    throw Error(ErrorCode::kArityMismatch,
                "function has " + std::to_string(values_.size()) + " values, ports require " +
                    std::to_string(expected));
  }
  for (const auto& v : values_) {
    if (!is_finite(v)) throw Error(ErrorCode::kInvalidArgument, "non-finite function value");
  }
}

LocalFunction LocalFunction::scalar(Scalar value) { return LocalFunction({}, {value}); }

LocalFunction LocalFunction::zeros(std::vector<Alphabet> ports) {
  const size_t n = product_size(ports);
  return LocalFunction(std::move(ports), std::vector<Scalar>(n));
}

std::vector<size_t> LocalFunction::shape() const {
  std::vector<size_t> s;
  s.reserve(ports_.size());
  for (const auto& a : ports_) s.push_back(a.size());
  return s;
}

std::vector<size_t> LocalFunction::strides() const {
  std::vector<size_t> s(ports_.size(), 1);
  for (size_t p = ports_.size(); p-- > 1;) s[p - 1] = s[p] * ports_[p].size();
  return s;
}

size_t LocalFunction::flat_index(std::span<const size_t> coords) const {
  if (coords.size() != ports_.size()) {
    throw Error(ErrorCode::kArityMismatch, "coordinate count does not match arity");
  }
  size_t idx = 0;
  for (size_t p = 0; p < coords.size(); ++p) {
    if (coords[p] >= ports_[p].size()) {
      throw Error(ErrorCode::kBadPortIndex, "coordinate out of range");
    }
    idx = idx * ports_[p].size() + coords[p];
  }
  return idx;
}

Scalar LocalFunction::at(std::span<const size_t> coords) const {
  return values_[flat_index(coords)];
}

std::vector<size_t> LocalFunction::coords_of(size_t flat) const {
  std::vector<size_t> c(ports_.size());
  for (size_t p = ports_.size(); p-- > 0;) {
    c[p] = flat % ports_[p].size();
    flat /= ports_[p].size();
  }
  return c;
}

Scalar LocalFunction::value() const {
  if (!ports_.empty()) {
    throw Error(ErrorCode::kArityMismatch,
                "value() on a function with " + std::to_string(ports_.size()) + " ports");
  }
  return values_.front();
}

LocalFunction delta_eq(const Alphabet& a, size_t arity) {
  if (arity < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "equality indicator needs arity >= 2, got " + std::to_string(arity));
  }
  std::vector<Alphabet> ports(arity, a);
  auto f = LocalFunction::zeros(ports);
  std::vector<Scalar> v = f.values();
  // Diagonal entries are spaced by 1 + n + n^2 + ... + n^(arity-1).
  size_t step = 0, place = 1;
  for (size_t k = 0; k < arity; ++k, place *= a.size()) step += place;
  for (size_t x = 0; x < a.size(); ++x) v[x * step] = 1.0;
  return LocalFunction(std::move(ports), std::move(v));
}

LocalFunction delta_plus(const FiniteAbelianGroup& g) {
  const Alphabet a = Alphabet::grouped(g);
  const size_t n = g.size();
  std::vector<Scalar> v(n * n);
  for (size_t x = 0; x < n; ++x) v[x * n + g.neg_index(x)] = 1.0;
  return LocalFunction({a, a}, std::move(v));
}

LocalFunction delta_plus(const Alphabet& a) { return delta_plus(a.group()); }

LocalFunction contract_pair(const LocalFunction& f, const LocalFunction& g,
                            std::span<const PortPair> pairing) {
  std::vector<bool> f_used(f.arity()), g_used(g.arity());
  for (auto [fp, gp] : pairing) {
    if (fp >= f.arity() || gp >= g.arity()) {
      throw Error(ErrorCode::kBadPortIndex, "pairing refers to a missing port");
    }
    if (f_used[fp] || g_used[gp]) {
      throw Error(ErrorCode::kInvalidArgument, "port paired twice");
    }
    if (!(f.port(fp) == g.port(gp))) {
      throw Error(ErrorCode::kAlphabetMismatch,
                  "paired ports carry " + f.port(fp).to_string() + " and " +
                      g.port(gp).to_string());
    }
    f_used[fp] = g_used[gp] = true;
  }
  std::vector<Alphabet> out_ports;
  for (size_t p = 0; p < f.arity(); ++p)
    if (!f_used[p]) out_ports.push_back(f.port(p));
  for (size_t p = 0; p < g.arity(); ++p)
    if (!g_used[p]) out_ports.push_back(g.port(p));

  kernels::PairContraction spec{f.shape(), g.shape(), {pairing.begin(), pairing.end()}};
  return LocalFunction(std::move(out_ports), kernels::contract(spec, f.values(), g.values()));
}

LocalFunction trace(const LocalFunction& f, std::span<const PortPair> pairs) {
  std::vector<bool> used(f.arity());
  for (auto [a, b] : pairs) {
    if (a >= f.arity() || b >= f.arity()) {
      throw Error(ErrorCode::kBadPortIndex, "trace refers to a missing port");
    }
    if (a == b || used[a] || used[b]) throw Error(ErrorCode::kInvalidArgument, "port traced twice");
    if (!(f.port(a) == f.port(b))) {
      throw Error(ErrorCode::kAlphabetMismatch, "traced ports carry different alphabets");
    }
    used[a] = used[b] = true;
  }
  std::vector<Alphabet> out_ports;
  for (size_t p = 0; p < f.arity(); ++p)
    if (!used[p]) out_ports.push_back(f.port(p));
  const auto shape = f.shape();
  return LocalFunction(std::move(out_ports), kernels::trace(shape, pairs, f.values()));
}

LocalFunction permute(const LocalFunction& f, std::span<const size_t> order) {
  const size_t n = f.arity();
  if (order.size() != n) throw Error(ErrorCode::kArityMismatch, "permutation length mismatch");
  std::vector<bool> seen(n);
  for (size_t p : order) {
    if (p >= n || seen[p]) throw Error(ErrorCode::kInvalidArgument, "not a permutation");
    seen[p] = true;
  }
  std::vector<Alphabet> ports;
  for (size_t p : order) ports.push_back(f.port(p));
  const auto in_strides = f.strides();
  std::vector<size_t> src_stride(n), dims(n);
  for (size_t k = 0; k < n; ++k) {
    src_stride[k] = in_strides[order[k]];
    dims[k] = ports[k].size();
  }
  std::vector<Scalar> v(f.size());
  for (size_t o = 0; o < v.size(); ++o) {
    size_t rest = o, src = 0;
    for (size_t k = n; k-- > 0;) {
      src += (rest % dims[k]) * src_stride[k];
      rest /= dims[k];
    }
    v[o] = f[src];
  }
  return LocalFunction(std::move(ports), std::move(v));
}

LocalFunction scale(const LocalFunction& f, Scalar s) {
  std::vector<Scalar> v = f.values();
  for (auto& x : v) x *= s;
  return LocalFunction(f.ports(), std::move(v));
}

bool approx_equal(const LocalFunction& a, const LocalFunction& b, Tolerance tol) {
  return a.ports() == b.ports() && approx_equal(std::span(a.values()), std::span(b.values()), tol);
}

}  // namespace nfg
