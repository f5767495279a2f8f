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

#include "nfg/fourier.hpp"

#include "nfg/error.hpp"

namespace nfg {

LocalFunction fourier_kernel(const Alphabet& a, FourierDirection dir) {
  const FiniteAbelianGroup& g = a.group();
  return LocalFunction({a, a}, dir == FourierDirection::kForward ? kappa_table(g)
                                                                 : kappa_hat_table(g));
}

LocalFunction fourier(const LocalFunction& f, FourierDirection dir) {
  for (size_t p = 0; p < f.arity(); ++p) {
    if (!f.port(p).is_group()) {
      throw Error(ErrorCode::kNotGroupAlphabet,
                  "port " + std::to_string(p) + " has plain alphabet " + f.port(p).to_string());
    }
  }
  // Contracting port 0 each round rotates the transformed port to the back,
  // so after arity rounds the original port order is restored.
  const PortPair first{0, 0};
  LocalFunction out = f;
  for (size_t p = 0; p < f.arity(); ++p) {
    out = contract_pair(out, fourier_kernel(f.port(p), dir), std::span(&first, 1));
  }
  return out;
}

}  // namespace nfg
