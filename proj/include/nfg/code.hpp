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

#ifndef NFG_CODE_HPP_
#define NFG_CODE_HPP_

#include <vector>

#include "nfg/evaluate.hpp"
#include "nfg/graph.hpp"

namespace nfg {

using Codeword = std::vector<GroupElement>;

// A group code: a subgroup of a product of finite abelian groups (one per
// symbol position). Codewords are kept as sorted flat indices into the
// product, enumerated like tensor entries.
class GroupCode {
 public:
  // Throws kInvalidCode when a codeword lies outside the ambient groups or
  // the set is not a subgroup.
  GroupCode(std::vector<FiniteAbelianGroup> ambient, const std::vector<Codeword>& codewords);
  static GroupCode from_indices(std::vector<FiniteAbelianGroup> ambient, std::vector<size_t> indices);
  // The subgroup generated by the rows.
  static GroupCode from_generators(std::vector<FiniteAbelianGroup> ambient,
                                   const std::vector<Codeword>& generators);

  static GroupCode repetition(size_t length, int q = 2);
  static GroupCode hamming74();
  static GroupCode full(std::vector<FiniteAbelianGroup> ambient);
  static GroupCode zero(std::vector<FiniteAbelianGroup> ambient);

  const std::vector<FiniteAbelianGroup>& ambient() const noexcept { return ambient_; }
  std::vector<Alphabet> alphabets() const;
  size_t length() const noexcept { return ambient_.size(); }
  size_t size() const noexcept { return indices_.size(); }
  double ambient_size() const;
  const std::vector<size_t>& indices() const noexcept { return indices_; }
  bool contains(size_t index) const;
  Codeword codeword(size_t index) const;
  std::vector<Codeword> codewords() const;

  friend bool operator==(const GroupCode& a, const GroupCode& b) {
    return a.ambient_ == b.ambient_ && a.indices_ == b.indices_;
  }

 private:
  GroupCode() = default;
  void init_flat();
  void check_subgroup() const;

  std::vector<FiniteAbelianGroup> ambient_;
  FiniteAbelianGroup flat_;  // direct product of all positions
  std::vector<size_t> indices_;
};

// 1 on codewords, 0 elsewhere; ports are the ambient groups.
LocalFunction code_indicator(const GroupCode& c);

// {xhat : kappa(c, xhat) = 1 for every codeword c}, by exhaustive scan with
// exact integer arithmetic on the exponents.
GroupCode dual_code_brute(const GroupCode& c, double cap = 1e6);

struct CodeDualityReport {
  double scale = 0.0;          // s with Z_G = s * 1_C
  double dual_scale = 0.0;     // s' with Z of the dual = s' * 1_{C^perp}
  double predicted_dual_scale = 0.0;  // |X_{E^int}| * |C| * s
  size_t code_size = 0;
  size_t dual_size = 0;
  double max_deviation = 0.0;  // Z of the dual vs predicted_dual_scale * 1_{C^perp}
  bool ok = true;
};

// Checks that g is a code NFG for `claimed` ({0,1}-valued local functions,
// exterior s * 1_C with the same s on every codeword), dualizes it and
// compares the dual exterior against the indicator of dual_code_brute.
// Throws kNotIndicator / kSupportMismatch when the structure is wrong.
CodeDualityReport verify_code_duality(const NFG& g, const GroupCode& claimed,
                                      Tolerance tol = kDefaultTolerance,
                                      const EvalOptions& opts = {});

// Single vertex holding code_indicator(c), one dangling edge per position.
NFG code_nfg(const GroupCode& c);

}  // namespace nfg

#endif  // NFG_CODE_HPP_
