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

#ifndef NFG_GROUP_HPP_
#define NFG_GROUP_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "nfg/scalar.hpp"

namespace nfg {

struct GroupElement {
  std::vector<int> residues;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

// Z_{n_1} x ... x Z_{n_k}, written additively. The character group is
// identified with the group itself through
//   kappa(x, xhat) = exp(2 pi i sum_j x_j xhat_j / n_j).
// Elements are enumerated lexicographically with the last factor fastest,
// which is also the row-major order used for tensor ports.
class FiniteAbelianGroup {
 public:
  FiniteAbelianGroup() = default;  // trivial group
  explicit FiniteAbelianGroup(std::vector<int> orders);

  // "Z2", "z3", "Z2xZ4"; "Z1" and "1" denote the trivial group.
  static FiniteAbelianGroup parse(std::string_view literal);

  const std::vector<int>& orders() const noexcept { return orders_; }
  size_t rank() const noexcept { return orders_.size(); }
  size_t size() const noexcept { return size_; }

  GroupElement zero() const;
  GroupElement add(const GroupElement& x, const GroupElement& y) const;
  GroupElement neg(const GroupElement& x) const;
  GroupElement make(std::vector<int> residues) const;  // reduces modulo orders

  size_t index_of(const GroupElement& x) const;
  GroupElement element_at(size_t index) const;
  // Index of -element_at(index), without materializing elements.
  size_t neg_index(size_t index) const;

  std::string to_string() const;

  friend bool operator==(const FiniteAbelianGroup& a,
                         const FiniteAbelianGroup& b) {
    return a.orders_ == b.orders_;
  }

 private:
  void check(const GroupElement& x) const;

  std::vector<int> orders_;
  size_t size_ = 1;
};

FiniteAbelianGroup direct_product(const FiniteAbelianGroup& a,
                                  const FiniteAbelianGroup& b);

Scalar kappa(const FiniteAbelianGroup& g, const GroupElement& x,
             const GroupElement& xhat);
// kappa(x, -xhat) / |g|
Scalar kappa_hat(const FiniteAbelianGroup& g, const GroupElement& x,
                 const GroupElement& xhat);

// Dense |g| x |g| tables, row = x index, column = xhat index.
std::vector<Scalar> kappa_table(const FiniteAbelianGroup& g);
std::vector<Scalar> kappa_hat_table(const FiniteAbelianGroup& g);

}  // namespace nfg

#endif  // NFG_GROUP_HPP_
