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

#ifndef NFG_FOURIER_HPP_
#define NFG_FOURIER_HPP_

#include "nfg/tensor.hpp"

namespace nfg {

enum class FourierDirection { kForward, kInverse };

// Kernel of a group alphabet as a bivariate function on (x, xhat):
// kappa for the forward transform, kappa_hat for the inverse.
LocalFunction fourier_kernel(const Alphabet& a, FourierDirection dir);

// Applies the kernel to every port independently (the transform is
// separable). Throws kNotGroupAlphabet if any port is plain.
LocalFunction fourier(const LocalFunction& f,
                      FourierDirection dir = FourierDirection::kForward);

}  // namespace nfg

#endif  // NFG_FOURIER_HPP_
