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

#include "nfg/holo.hpp"

#include <cmath>
#include <cstdio>

#include "nfg/error.hpp"
#include "nfg/fourier.hpp"

namespace nfg {
namespace {

std::string format_magnitude(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

Eigen::MatrixXcd to_matrix(const std::vector<Scalar>& values, size_t n) {
  Eigen::MatrixXcd m(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) m(i, j) = values[i * n + j];
  return m;
}

std::vector<Scalar> from_matrix(const Eigen::MatrixXcd& m) {
  std::vector<Scalar> v(static_cast<size_t>(m.size()));
  const auto n = static_cast<size_t>(m.rows());
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) v[i * n + j] = m(i, j);
  return v;
}

}  // namespace

Transformer::Transformer(Alphabet domain, Alphabet codomain, std::vector<Scalar> values)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), values_(std::move(values)) {
  const size_t n = domain_.size();
  if (codomain_.size() != n) {
    throw Error(ErrorCode::kArityMismatch, "transformer must be square, got " + domain_.to_string() +
                                               " -> " + codomain_.to_string());
  }
  if (values_.size() != n * n) {
    throw Error(ErrorCode::kArityMismatch, "transformer needs " + std::to_string(n * n) +
                                               " values, got " + std::to_string(values_.size()));
  }
  for (const auto& z : values_)
    if (!is_finite(z)) throw Error(ErrorCode::kInvalidArgument, "non-finite transformer entry");
  const Eigen::MatrixXcd m = to_matrix(values_, n);
  double scale = 1.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) scale *= m.row(i).norm();
  const double det = std::abs(m.determinant());
  if (!(det >= 1e-12 * scale) || scale == 0.0) {
    throw Error(ErrorCode::kSingularMatrix, "|det| = " + format_magnitude(det));
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  const auto& s = svd.singularValues();
  cond_ = s(0) / s(s.size() - 1);
}

Transformer Transformer::identity(const Alphabet& a) {
  return Transformer(a, a, delta_eq(a, 2).values());
}

Transformer Transformer::kappa(const Alphabet& a) {
  return Transformer(a, a, fourier_kernel(a, FourierDirection::kForward).values());
}

Transformer Transformer::kappa_hat(const Alphabet& a) {
  return Transformer(a, a, fourier_kernel(a, FourierDirection::kInverse).values());
}

Eigen::MatrixXcd Transformer::matrix() const { return to_matrix(values_, dim()); }

LocalFunction Transformer::as_function() const { return LocalFunction({domain_, codomain_}, values_); }

Transformer invert(const Transformer& t) {
  const Eigen::MatrixXcd inv = t.matrix().inverse().transpose();
  return Transformer(t.domain(), t.codomain(), from_matrix(inv));
}

Transformer separable_compose(std::span<const Transformer> parts) {
  if (parts.empty()) throw Error(ErrorCode::kInvalidArgument, "nothing to compose");
  auto combine = [](const Alphabet& a, const Alphabet& b) {
    if (a.is_group() && b.is_group()) return Alphabet::grouped(direct_product(a.group(), b.group()));
    return Alphabet::plain(a.size() * b.size());
  };
  Alphabet dom = parts[0].domain();
  Alphabet cod = parts[0].codomain();
  Eigen::MatrixXcd m = parts[0].matrix();
  for (size_t k = 1; k < parts.size(); ++k) {
    const Eigen::MatrixXcd b = parts[k].matrix();
    Eigen::MatrixXcd kron(m.rows() * b.rows(), m.cols() * b.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index j = 0; j < m.cols(); ++j)
        kron.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = m(i, j) * b;
    m = std::move(kron);
    dom = combine(dom, parts[k].domain());
    cod = combine(cod, parts[k].codomain());
  }
  return Transformer(dom, cod, from_matrix(m));
}

LocalFunction apply_transformers(const LocalFunction& f, std::span<const Transformer* const> kernels) {
  if (kernels.size() != f.arity()) {
    throw Error(ErrorCode::kArityMismatch, "need one transformer per port");
  }
  // Contracting port 0 each time moves the new Y port to the back, so after
  // arity steps the original order is restored.
  LocalFunction out = f;
  const PortPair head{0, 0};
  for (const Transformer* t : kernels) {
    out = contract_pair(out, t->as_function(), std::span(&head, 1));
  }
  return out;
}

void check_assignment(const NFG& g, const TransformerAssignment& a, Tolerance tol) {
  for (const auto& v : g.vertices()) {
    for (size_t p = 0; p < v.function.arity(); ++p) {
      const PortRef ref{v.id, p};
      auto it = a.find(ref);
      if (it == a.end()) throw Error(ErrorCode::kMissingAssignment, to_string(ref));
      if (!(it->second.domain() == v.function.port(p))) {
        throw Error(ErrorCode::kAlphabetMismatch, "transformer at " + to_string(ref) + " has domain " +
                                                      it->second.domain().to_string() + ", port is " +
                                                      v.function.port(p).to_string());
      }
    }
  }
  for (size_t i = 0; i < g.internal_edges().size(); ++i) {
    const auto& e = g.internal_edges()[i];
    const Transformer& ta = a.at(e.a);
    const Transformer& tb = a.at(e.b);
    const std::string where = "internal edge " + std::to_string(i) + " (" + to_string(e.a) + " -- " +
                              to_string(e.b) + ")";
    if (!(ta.codomain() == tb.codomain())) {
      throw Error(ErrorCode::kInversePairViolation,
                  where + ": codomains " + ta.codomain().to_string() + " and " + tb.codomain().to_string());
    }
    const Eigen::MatrixXcd prod = ta.matrix() * tb.matrix().transpose();
    const Eigen::MatrixXcd eye = Eigen::MatrixXcd::Identity(prod.rows(), prod.cols());
    const auto got = from_matrix(prod);
    const auto want = from_matrix(eye);
    if (!approx_equal(got, want, tol)) {
      throw Error(ErrorCode::kInversePairViolation,
                  where + ": deviation " + format_magnitude(relative_deviation(got, want)));
    }
  }
}

NFG holographic_transform(const NFG& g, const TransformerAssignment& a, Tolerance tol) {
  check_assignment(g, a, tol);
  const auto& vs = g.vertices();
  std::vector<Vertex> out(vs.size());
  const long n = static_cast<long>(vs.size());
#pragma omp parallel for schedule(dynamic)
  for (long k = 0; k < n; ++k) {
    const Vertex& v = vs[static_cast<size_t>(k)];
    std::vector<const Transformer*> ks;
    for (size_t p = 0; p < v.function.arity(); ++p) ks.push_back(&a.at({v.id, p}));
    out[static_cast<size_t>(k)] = Vertex{v.id, apply_transformers(v.function, ks)};
  }
  return NFG::build(std::move(out), g.internal_edges(), g.dangling_edges());
}

std::vector<const Transformer*> external_transformers(const NFG& g, const TransformerAssignment& a) {
  std::vector<const Transformer*> out;
  for (const auto& d : g.dangling_edges()) {
    auto it = a.find(d.at);
    if (it == a.end()) throw Error(ErrorCode::kMissingAssignment, to_string(d.at));
    out.push_back(&it->second);
  }
  return out;
}

RewriteReport verify_holant(const NFG& g, const TransformerAssignment& a, EvalMode mode, Tolerance tol,
                            const EvalOptions& opts) {
  const NFG gh = holographic_transform(g, a, tol);
  RewriteReport r;
  const LocalFunction zg = eval_exterior(g, mode, opts);
  r.before = apply_transformers(zg, external_transformers(g, a));
  r.after = eval_exterior(gh, mode, opts);
  r.max_deviation = relative_deviation(r.after->values(), r.before->values());
  r.preserved = approx_equal(r.after->values(), r.before->values(), tol);
  return r;
}

}  // namespace nfg
