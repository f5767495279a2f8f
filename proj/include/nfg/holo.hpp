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

#ifndef NFG_HOLO_HPP_
#define NFG_HOLO_HPP_

#include <map>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "nfg/evaluate.hpp"
#include "nfg/graph.hpp"
#include "nfg/rewrite.hpp"

namespace nfg {

// A square, invertible kernel Phi(x, y) with x in the domain X and y in the
// codomain Y, stored as an |X| x |Y| row-major matrix.
class Transformer {
 public:
  // Throws kArityMismatch when |X| != |Y| or the value count is wrong, and
  // kSingularMatrix when |det| < 1e-12 * (product of row norms).
  Transformer(Alphabet domain, Alphabet codomain, std::vector<Scalar> values);

  static Transformer identity(const Alphabet& a);
  static Transformer kappa(const Alphabet& a);      // group alphabets only
  static Transformer kappa_hat(const Alphabet& a);  // group alphabets only

  const Alphabet& domain() const noexcept { return domain_; }
  const Alphabet& codomain() const noexcept { return codomain_; }
  size_t dim() const noexcept { return domain_.size(); }
  const std::vector<Scalar>& values() const noexcept { return values_; }
  Scalar operator()(size_t x, size_t y) const { return values_[x * dim() + y]; }

  Eigen::MatrixXcd matrix() const;
  // 2-norm condition number, computed at construction.
  double condition_number() const noexcept { return cond_; }
  // The kernel as a bivariate local function with ports (X, Y).
  LocalFunction as_function() const;

 private:
  Alphabet domain_;
  Alphabet codomain_;
  std::vector<Scalar> values_;
  double cond_ = 1.0;
};

// Phihat with sum_y Phi(x, y) Phihat(x', y) = delta(x, x'), i.e. the
// transposed matrix inverse, with the same domain and codomain as t.
Transformer invert(const Transformer& t);

// Kronecker product: the separable kernel on the product alphabets. Group
// alphabets combine into the direct product group; otherwise the result is
// plain.
Transformer separable_compose(std::span<const Transformer> parts);

// Phi_{v,p} for every port of every vertex.
using TransformerAssignment = std::map<PortRef, Transformer>;

// Contracts port p of f with kernels[p] (x_p summed, y_p kept) for every p.
LocalFunction apply_transformers(const LocalFunction& f,
                                 std::span<const Transformer* const> kernels);

// Throws kMissingAssignment, kAlphabetMismatch (domain differs from the port
// alphabet) or kInversePairViolation (transformers on the two ends of an
// internal edge are not inverse to each other).
void check_assignment(const NFG& g, const TransformerAssignment& a,
                      Tolerance tol = kDefaultTolerance);

// G^H: same topology, F_v = <f_v, prod_p Phi_{v,p}>.
NFG holographic_transform(const NFG& g, const TransformerAssignment& a,
                          Tolerance tol = kDefaultTolerance);

// The transformers sitting on the dangling edges, in declared order.
std::vector<const Transformer*> external_transformers(const NFG& g,
                                                      const TransformerAssignment& a);

// before = Z_G pushed through the external transformers, after = Z_{G^H}.
RewriteReport verify_holant(const NFG& g, const TransformerAssignment& a,
                            EvalMode mode = EvalMode::kEliminate,
                            Tolerance tol = kDefaultTolerance,
                            const EvalOptions& opts = {});

}  // namespace nfg

#endif  // NFG_HOLO_HPP_
