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

#include "nfg/pfaffian.hpp"

#include <cstdio>
#include <vector>

#include "nfg/error.hpp"

namespace nfg {
namespace {

std::string magnitude(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

Scalar expand(const Eigen::MatrixXcd& a, std::vector<Eigen::Index>& idx) {
  if (idx.empty()) return 1.0;
  const Eigen::Index i = idx[0];
  Scalar s = 0.0;
  for (size_t k = 1; k < idx.size(); ++k) {
    const Eigen::Index j = idx[k];
    if (a(i, j) == Scalar(0.0)) continue;
    std::vector<Eigen::Index> rest;
    for (size_t m = 1; m < idx.size(); ++m)
      if (m != k) rest.push_back(idx[m]);
    const double sign = (k % 2) ? 1.0 : -1.0;
    s += sign * a(i, j) * expand(a, rest);
  }
  return s;
}

}  // namespace

Scalar pfaffian_expansion(const Eigen::MatrixXcd& a) {
  std::vector<Eigen::Index> idx(static_cast<size_t>(a.rows()));
  for (Eigen::Index k = 0; k < a.rows(); ++k) idx[static_cast<size_t>(k)] = k;
  return expand(a, idx);
}

Scalar pfaffian_elimination(Eigen::MatrixXcd a) {
  const Eigen::Index n = a.rows();
  Scalar pf = 1.0;
  for (Eigen::Index k = 0; k + 1 < n; k += 2) {
    Eigen::Index kp;
    a.col(k).tail(n - k - 1).cwiseAbs().maxCoeff(&kp);
    kp += k + 1;
    if (kp != k + 1) {
      a.row(k + 1).swap(a.row(kp));
      a.col(k + 1).swap(a.col(kp));
      pf = -pf;
    }
    if (a(k + 1, k) == Scalar(0.0)) return 0.0;
    pf *= a(k, k + 1);
    if (k + 2 < n) {
      const Eigen::Index m = n - k - 2;
      const Eigen::VectorXcd tau = a.row(k).tail(m).transpose() / a(k, k + 1);
      const Eigen::VectorXcd col = a.col(k + 1).tail(m);
      a.bottomRightCorner(m, m) += tau * col.transpose() - col * tau.transpose();
    }
  }
  return pf;
}

Scalar pfaffian(const Eigen::MatrixXcd& a, Tolerance tol) {
  if (a.rows() != a.cols()) throw Error(ErrorCode::kInvalidArgument, "matrix is not square");
  if (a.rows() % 2) throw Error(ErrorCode::kOddDimension, std::to_string(a.rows()) + " rows");
  if (a.rows() == 0) return 1.0;
  const double scale = a.cwiseAbs().maxCoeff();
  const double asym = (a + a.transpose()).cwiseAbs().maxCoeff();
  if (asym > tol.abs + tol.rel * scale) {
    throw Error(ErrorCode::kNotSkewSymmetric, "max |A + A^T| = " + magnitude(asym));
  }
  return a.rows() <= 8 ? pfaffian_expansion(a) : pfaffian_elimination(a);
}

}  // namespace nfg
