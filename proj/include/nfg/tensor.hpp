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

#ifndef NFG_TENSOR_HPP_
#define NFG_TENSOR_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nfg/group.hpp"
#include "nfg/scalar.hpp"

namespace nfg {

// A finite alphabet: either a bare set {0..size-1} or a finite abelian group
// whose elements are indexed lexicographically.
class Alphabet {
 public:
  static Alphabet plain(size_t size);
  static Alphabet grouped(FiniteAbelianGroup group);
  // "Z2xZ3" (grouped) or "4" (plain).
  static Alphabet parse(std::string_view literal);

  size_t size() const noexcept { return size_; }
  bool is_group() const noexcept { return group_.has_value(); }
  // Throws kNotGroupAlphabet for plain alphabets.
  const FiniteAbelianGroup& group() const;
  std::string to_string() const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.size_ == b.size_ && a.group_ == b.group_;
  }

 private:
  Alphabet(size_t size, std::optional<FiniteAbelianGroup> group)
      : size_(size), group_(std::move(group)) {}

  size_t size_;
  std::optional<FiniteAbelianGroup> group_;
};

using PortPair = std::pair<size_t, size_t>;

// A complex-valued function on a product of alphabets, stored densely in
// row-major order (last port fastest). Zero ports means a scalar.
class LocalFunction {
 public:
  LocalFunction() : values_{Scalar{1.0, 0.0}} {}
  LocalFunction(std::vector<Alphabet> ports, std::vector<Scalar> values);

  static LocalFunction scalar(Scalar value);
  static LocalFunction zeros(std::vector<Alphabet> ports);

  const std::vector<Alphabet>& ports() const noexcept { return ports_; }
  const Alphabet& port(size_t p) const { return ports_.at(p); }
  size_t arity() const noexcept { return ports_.size(); }
  size_t size() const noexcept { return values_.size(); }
  std::vector<size_t> shape() const;
  std::vector<size_t> strides() const;

  const std::vector<Scalar>& values() const noexcept { return values_; }
  Scalar operator[](size_t flat) const { return values_[flat]; }
  Scalar at(std::span<const size_t> coords) const;
  size_t flat_index(std::span<const size_t> coords) const;
  std::vector<size_t> coords_of(size_t flat) const;

  // Scalar value of a 0-port function.
  Scalar value() const;

  friend bool operator==(const LocalFunction&, const LocalFunction&) = default;

 private:
  std::vector<Alphabet> ports_;
  std::vector<Scalar> values_;
};

size_t product_size(std::span<const Alphabet> ports);

// 1 iff all arguments are equal.
LocalFunction delta_eq(const Alphabet& a, size_t arity = 2);
// Bivariate; 1 iff x + x' = 0 in the group.
LocalFunction delta_plus(const FiniteAbelianGroup& g);
LocalFunction delta_plus(const Alphabet& a);

// Sum over paired coordinates of f * g. Output ports are the unpaired ports of
// f (in order) followed by those of g. An empty pairing gives the tensor
// product; pairing every port gives the dot product.
LocalFunction contract_pair(const LocalFunction& f, const LocalFunction& g,
                            std::span<const PortPair> pairing);

// Sums f over the diagonal of each listed port pair (self-loop contraction).
LocalFunction trace(const LocalFunction& f, std::span<const PortPair> pairs);

// Output port k is input port order[k].
LocalFunction permute(const LocalFunction& f, std::span<const size_t> order);

LocalFunction scale(const LocalFunction& f, Scalar s);

// True when ports match exactly and values agree within tolerance.
bool approx_equal(const LocalFunction& a, const LocalFunction& b,
                  Tolerance tol = kDefaultTolerance);

}  // namespace nfg

#endif  // NFG_TENSOR_HPP_
