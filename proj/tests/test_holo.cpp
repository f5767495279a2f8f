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

#include "doctest.h"
#include "fixtures.hpp"
#include "nfg/error.hpp"
#include "nfg/evaluate.hpp"
#include "nfg/holo.hpp"
#include "nfg/random.hpp"

using namespace nfg;
using fixture::z2;

namespace {

const Alphabet z3 = Alphabet::parse("Z3");

bool close(const std::vector<Scalar>& a, const std::vector<Scalar>& b, double eps = 1e-12) {
  return a.size() == b.size() && max_abs_difference(a, b) <= eps;
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::kInvalidArgument;
}

const Transformer hadamard() { return Transformer(z2(), z2(), {1.0, 1.0, 1.0, -1.0}); }

}  // namespace

TEST_CASE("transformer construction") {
  CHECK(code_of([] { Transformer(z2(), z2(), {1.0, 2.0, 2.0, 4.0}); }) == ErrorCode::kSingularMatrix);
  CHECK(code_of([] { Transformer(z2(), z3, {1.0, 0.0, 0.0, 1.0}); }) == ErrorCode::kArityMismatch);
  CHECK(code_of([] { Transformer(z2(), z2(), {1.0, 0.0, 1.0}); }) == ErrorCode::kArityMismatch);
  CHECK(code_of([] { Transformer(z2(), z2(), {1.0, 0.0, 0.0, std::nan("")}); }) == ErrorCode::kInvalidArgument);
  CHECK(code_of([] { Transformer::kappa(Alphabet::plain(2)); }) == ErrorCode::kNotGroupAlphabet);
  CHECK(Transformer::identity(z3).condition_number() == doctest::Approx(1.0));
  CHECK(hadamard().condition_number() == doctest::Approx(1.0));
  CHECK(Transformer(z2(), z2(), {1.0, 0.0, 0.0, 1e-3}).condition_number() == doctest::Approx(1e3));
}

TEST_CASE("invert") {
  CHECK(invert(Transformer::identity(z2())).values() == Transformer::identity(z2()).values());
  CHECK(close(invert(hadamard()).values(), {0.5, 0.5, 0.5, -0.5}));
  CHECK(close(invert(Transformer::kappa(z3)).values(), Transformer::kappa_hat(z3).values()));
  random::Rng rng(1);
  const auto t = random::random_transformer(rng, z3, z3);
  // Phi Phihat^T = I
  const Eigen::MatrixXcd m = t.matrix() * invert(t).matrix().transpose();
  CHECK((m - Eigen::MatrixXcd::Identity(3, 3)).norm() < 1e-10);
}

TEST_CASE("separable_compose") {
  const std::vector<Transformer> ids{Transformer::identity(z2()), Transformer::identity(z3)};
  const auto c = separable_compose(ids);
  CHECK(c.dim() == 6);
  CHECK(c.domain() == Alphabet::parse("Z2xZ3"));
  CHECK(close(c.values(), Transformer::identity(Alphabet::parse("Z2xZ3")).values()));

  const std::vector<Transformer> kk{Transformer::kappa(z2()), Transformer::kappa(z2())};
  CHECK(close(separable_compose(kk).values(), Transformer::kappa(Alphabet::parse("Z2xZ2")).values()));

  random::Rng rng(2);
  const std::vector<Transformer> parts{random::random_transformer(rng, z2(), z2()),
                                       random::random_transformer(rng, z3, z3)};
  const std::vector<Transformer> inv{invert(parts[0]), invert(parts[1])};
  CHECK(close(invert(separable_compose(parts)).values(), separable_compose(inv).values(), 1e-10));
  const std::vector<Transformer> plain{Transformer::identity(Alphabet::plain(2)), Transformer::identity(z2())};
  CHECK(!separable_compose(plain).domain().is_group());
}

TEST_CASE("holographic transform of the closed pair") {
  const auto n = fixture::closed_pair();
  TransformerAssignment a;
  a.emplace(PortRef{"f", 0}, hadamard());
  a.emplace(PortRef{"g", 0}, invert(hadamard()));
  const auto t = holographic_transform(n, a);
  CHECK(close(t.function("f").values(), {2.0, 0.0}));
  CHECK(close(t.function("g").values(), {1.5, -0.5}));
  CHECK(t.internal_edges() == n.internal_edges());
  CHECK(eval_exterior(t).value() == Scalar(3.0));
  const auto r = verify_holant(n, a);
  CHECK(r.preserved);
  CHECK(r.max_deviation == 0.0);
}

TEST_CASE("identity assignment changes nothing") {
  random::Rng rng(3);
  for (int k = 0; k < 10; ++k) {
    const auto n = random::random_nfg(rng);
    TransformerAssignment a;
    for (const auto& v : n.vertices())
      for (size_t p = 0; p < v.function.arity(); ++p) a.emplace(PortRef{v.id, p}, Transformer::identity(v.function.port(p)));
    const auto t = holographic_transform(n, a);
    CHECK(t == n);
    const auto r = verify_holant(n, a);
    CHECK(r.before->values() == r.after->values());
  }
}

TEST_CASE("assignment validation") {
  const auto n = fixture::closed_pair();
  TransformerAssignment a;
  a.emplace(PortRef{"f", 0}, hadamard());
  CHECK(code_of([&] { holographic_transform(n, a); }) == ErrorCode::kMissingAssignment);
  a.emplace(PortRef{"g", 0}, hadamard());
  try {
    check_assignment(n, a);
    FAIL("accepted a non-inverse pair");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kInversePairViolation);
    CHECK(std::string(e.what()).find("f:0") != std::string::npos);
  }
  TransformerAssignment b;
  b.emplace(PortRef{"f", 0}, Transformer::identity(z3));
  b.emplace(PortRef{"g", 0}, Transformer::identity(z3));
  CHECK(code_of([&] { check_assignment(n, b); }) == ErrorCode::kAlphabetMismatch);
}

TEST_CASE("codomain may differ from the domain") {
  // Z2 ports mapped onto a plain size-2 codomain on both ends of the edge.
  const auto n = fixture::closed_pair();
  const Transformer phi(z2(), Alphabet::plain(2), {2.0, 1.0, 0.0, 1.0});
  TransformerAssignment a;
  a.emplace(PortRef{"f", 0}, phi);
  a.emplace(PortRef{"g", 0}, invert(phi));
  const auto t = holographic_transform(n, a);
  CHECK(t.function("f").port(0) == Alphabet::plain(2));
  CHECK(std::abs(eval_exterior(t).value() - 3.0) < 1e-12);
}

TEST_CASE("property: generalized Holant on random NFGs") {
  random::Rng rng(4);
  for (int k = 0; k < 60; ++k) {
    const auto n = random::random_nfg(rng);
    const auto a = random::random_assignment(rng, n);
    const auto r = verify_holant(n, a);
    CHECK(r.max_deviation <= 1e-8);
    CHECK(r.preserved);
  }
}

TEST_CASE("apply_transformers contracts each port") {
  const LocalFunction f({z2(), z3}, {1.0, 2.0, 3.0, 4.0, 5.0, 6.0});
  const auto h = hadamard();
  const auto i3 = Transformer::identity(z3);
  const std::vector<const Transformer*> ks{&h, &i3};
  const auto g = apply_transformers(f, ks);
  CHECK(close(g.values(), {5.0, 7.0, 9.0, -3.0, -3.0, -3.0}));
}
