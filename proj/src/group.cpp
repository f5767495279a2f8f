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

#include "nfg/group.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>

#include "nfg/error.hpp"

namespace nfg {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<int> orders)
    : orders_(std::move(orders)) {
  for (int n : orders_) {
    if (n < 2) {
      throw Error(ErrorCode::kInvalidArgument,
                  "cyclic factor order must be >= 2, got " + std::to_string(n));
    }
    size_ *= static_cast<size_t>(n);
  }
}

FiniteAbelianGroup FiniteAbelianGroup::parse(std::string_view literal) {
  std::string s;
  for (char c : literal) {
    if (!std::isspace(static_cast<unsigned char>(c))) {
      s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
  }
  if (s == "1" || s == "trivial") return FiniteAbelianGroup();
  std::vector<int> orders;
  size_t pos = 0;
  while (pos < s.size()) {
    if (s[pos] != 'z') {
      throw Error(ErrorCode::kParseError,
                  "bad group literal '" + std::string(literal) + "'");
    }
    ++pos;
    int n = 0;
    auto [ptr, ec] = std::from_chars(s.data() + pos, s.data() + s.size(), n);
    if (ec != std::errc() || ptr == s.data() + pos) {
      throw Error(ErrorCode::kParseError,
                  "bad group literal '" + std::string(literal) + "'");
    }
    pos = static_cast<size_t>(ptr - s.data());
    if (n < 1) {
      throw Error(ErrorCode::kParseError,
                  "bad group order in '" + std::string(literal) + "'");
    }
    if (n > 1) orders.push_back(n);
    if (pos < s.size()) {
      if (s[pos] != 'x') {
        throw Error(ErrorCode::kParseError,
                    "bad group literal '" + std::string(literal) + "'");
      }
      ++pos;
      if (pos == s.size()) {
        throw Error(ErrorCode::kParseError,
                    "dangling 'x' in '" + std::string(literal) + "'");
      }
    }
  }
  if (s.empty()) {
    throw Error(ErrorCode::kParseError, "empty group literal");
  }
  return FiniteAbelianGroup(std::move(orders));
}

void FiniteAbelianGroup::check(const GroupElement& x) const {
  if (x.residues.size() != orders_.size()) {
    throw Error(ErrorCode::kArityMismatch,
                "element has " + std::to_string(x.residues.size()) +
                    " residues, group " + to_string() + " has " +
                    std::to_string(orders_.size()) + " factors");
  }
}

GroupElement FiniteAbelianGroup::zero() const {
  return GroupElement{std::vector<int>(orders_.size(), 0)};
}

GroupElement FiniteAbelianGroup::make(std::vector<int> residues) const {
  GroupElement x{std::move(residues)};
  check(x);
  for (size_t j = 0; j < orders_.size(); ++j) {
    x.residues[j] %= orders_[j];
    if (x.residues[j] < 0) x.residues[j] += orders_[j];
  }
  return x;
}

GroupElement FiniteAbelianGroup::add(const GroupElement& x,
                                     const GroupElement& y) const {
  check(x);
  check(y);
  GroupElement r = zero();
  for (size_t j = 0; j < orders_.size(); ++j) {
    r.residues[j] = (x.residues[j] + y.residues[j]) % orders_[j];
    if (r.residues[j] < 0) r.residues[j] += orders_[j];
  }
  return r;
}

GroupElement FiniteAbelianGroup::neg(const GroupElement& x) const {
  check(x);
  GroupElement r = zero();
  for (size_t j = 0; j < orders_.size(); ++j) {
    r.residues[j] = (orders_[j] - x.residues[j] % orders_[j]) % orders_[j];
  }
  return r;
}

size_t FiniteAbelianGroup::index_of(const GroupElement& x) const {
  check(x);
  size_t idx = 0;
  for (size_t j = 0; j < orders_.size(); ++j) {
    int r = x.residues[j] % orders_[j];
    if (r < 0) r += orders_[j];
    idx = idx * static_cast<size_t>(orders_[j]) + static_cast<size_t>(r);
  }
  return idx;
}

GroupElement FiniteAbelianGroup::element_at(size_t index) const {
  GroupElement x = zero();
  for (size_t j = orders_.size(); j-- > 0;) {
    x.residues[j] = static_cast<int>(index % static_cast<size_t>(orders_[j]));
    index /= static_cast<size_t>(orders_[j]);
  }
  return x;
}

size_t FiniteAbelianGroup::neg_index(size_t index) const {
  size_t out = 0;
  size_t place = 1;
  for (size_t j = orders_.size(); j-- > 0;) {
    const auto n = static_cast<size_t>(orders_[j]);
    const size_t r = index % n;
    index /= n;
    out += ((n - r) % n) * place;
    place *= n;
  }
  return out;
}

std::string FiniteAbelianGroup::to_string() const {
  if (orders_.empty()) return "Z1";
  std::string s;
  for (size_t j = 0; j < orders_.size(); ++j) {
    if (j) s += "x";
    s += "Z" + std::to_string(orders_[j]);
  }
  return s;
}

FiniteAbelianGroup direct_product(const FiniteAbelianGroup& a,
                                  const FiniteAbelianGroup& b) {
  std::vector<int> orders = a.orders();
  orders.insert(orders.end(), b.orders().begin(), b.orders().end());
  return FiniteAbelianGroup(std::move(orders));
}

namespace {

// exp(2 pi i * num / den) with num reduced first so the phase stays in [0, 1).
Scalar unit_root(long long num, long long den) {
  num %= den;
  if (num < 0) num += den;
  const double phase = 2.0 * std::numbers::pi * static_cast<double>(num) /
                       static_cast<double>(den);
  return {std::cos(phase), std::sin(phase)};
}

Scalar kappa_unchecked(const std::vector<int>& orders, const GroupElement& x,
                       const GroupElement& xhat) {
  Scalar z{1.0, 0.0};
  for (size_t j = 0; j < orders.size(); ++j) {
    z *= unit_root(static_cast<long long>(x.residues[j]) * xhat.residues[j],
                   orders[j]);
  }
  return z;
}

}  // namespace

Scalar kappa(const FiniteAbelianGroup& g, const GroupElement& x,
             const GroupElement& xhat) {
  (void)g.index_of(x);
  (void)g.index_of(xhat);
  return kappa_unchecked(g.orders(), x, xhat);
}

Scalar kappa_hat(const FiniteAbelianGroup& g, const GroupElement& x,
                 const GroupElement& xhat) {
  return kappa(g, x, g.neg(xhat)) / static_cast<double>(g.size());
}

std::vector<Scalar> kappa_table(const FiniteAbelianGroup& g) {
  const size_t n = g.size();
  std::vector<Scalar> t(n * n);
  for (size_t i = 0; i < n; ++i) {
    const GroupElement x = g.element_at(i);
    for (size_t j = 0; j < n; ++j) {
      t[i * n + j] = kappa_unchecked(g.orders(), x, g.element_at(j));
    }
  }
  return t;
}

std::vector<Scalar> kappa_hat_table(const FiniteAbelianGroup& g) {
  const size_t n = g.size();
  const std::vector<Scalar> k = kappa_table(g);
  std::vector<Scalar> t(n * n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      t[i * n + j] = k[i * n + g.neg_index(j)] / static_cast<double>(n);
    }
  }
  return t;
}

}  // namespace nfg
