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

#ifndef NFG_PFAFFIAN_HPP_
#define NFG_PFAFFIAN_HPP_

#include <Eigen/Dense>

#include "nfg/scalar.hpp"

namespace nfg {

// Pf(A) of a skew-symmetric matrix; 1 for the 0x0 matrix. Uses the
// combinatorial expansion up to 8x8 and Parlett-Reid elimination above.
// Throws kOddDimension, or kNotSkewSymmetric when
// max|A + A^T| > tol.abs + tol.rel * max|A|.
Scalar pfaffian(const Eigen::MatrixXcd& a, Tolerance tol = kDefaultTolerance);

// Expansion along the first row (exponential; small n only).
Scalar pfaffian_expansion(const Eigen::MatrixXcd& a);
// Parlett-Reid LTL^T with partial pivoting, O(n^3).
Scalar pfaffian_elimination(Eigen::MatrixXcd a);

}  // namespace nfg

#endif  // NFG_PFAFFIAN_HPP_
