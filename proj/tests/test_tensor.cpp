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

#include <vector>

#include "doctest.h"
#include "nfg/error.hpp"
#include "nfg/tensor.hpp"

using nfg::Alphabet;
using nfg::LocalFunction;
using nfg::Scalar;

namespace {
std::vector<Scalar> vals(std::initializer_list<double> v) { return {v.begin(), v.end()}; }
}  // namespace

TEST_CASE("alphabet literals") {
  CHECK(Alphabet::parse("3") == Alphabet::plain(3));
  CHECK(!Alphabet::parse("3").is_group());
  CHECK(Alphabet::parse("Z2xZ2").size() == 4);
  CHECK(Alphabet::parse("Z2xZ2").to_string() == "Z2xZ2");
  CHECK(!(Alphabet::parse("2") == Alphabet::parse("Z2")));
  CHECK_THROWS_AS(Alphabet::parse("3q"), nfg::Error);
  CHECK_THROWS_AS(Alphabet::plain(3).group(), nfg::Error);
}

TEST_CASE("value count must match the ports") {
  CHECK_THROWS_AS(LocalFunction({Alphabet::plain(2)}, vals({1, 2, 3})), nfg::Error);
  CHECK(LocalFunction::scalar(4.0).value() == Scalar(4.0));
  CHECK_THROWS_AS(LocalFunction({Alphabet::plain(2)}, vals({1, 2})).value(), nfg::Error);
}

TEST_CASE("delta_eq") {
  const auto z2 = Alphabet::parse("Z2");
  CHECK(nfg::delta_eq(z2, 2).values() == vals({1, 0, 0, 1}));
  const auto d3 = nfg::delta_eq(z2, 3);
  for (size_t i = 0; i < 8; ++i) CHECK(d3[i] == Scalar(i == 0 || i == 7 ? 1.0 : 0.0));
  const auto p3 = nfg::delta_eq(Alphabet::plain(3), 2);
  for (size_t i = 0; i < 9; ++i) CHECK(p3[i] == Scalar(i % 4 == 0 ? 1.0 : 0.0));
}

TEST_CASE("delta_plus") {
  CHECK(nfg::delta_plus(Alphabet::parse("Z2")) == nfg::delta_eq(Alphabet::parse("Z2"), 2));
  const auto d = nfg::delta_plus(Alphabet::parse("Z3"));
  for (size_t x = 0; x < 3; ++x)
    for (size_t y = 0; y < 3; ++y) CHECK(d[x * 3 + y] == Scalar((x + y) % 3 == 0 ? 1.0 : 0.0));
  const auto d4 = nfg::delta_plus(Alphabet::parse("Z2xZ2"));
  CHECK(d4 == nfg::delta_eq(Alphabet::parse("Z2xZ2"), 2));
  CHECK_THROWS_AS(nfg::delta_plus(Alphabet::plain(3)), nfg::Error);
}

TEST_CASE("contract_pair") {
  const auto z2 = Alphabet::parse("Z2");
  const LocalFunction f({z2}, vals({1, 1}));
  const LocalFunction g({z2}, vals({1, 2}));
  const std::vector<nfg::PortPair> full{{0, 0}};
  CHECK(nfg::contract_pair(f, g, full).value() == Scalar(3.0));

  const LocalFunction h({z2, z2}, {Scalar(1, 1), 2.0, -1.0, Scalar(0, 3)});
  const auto id = nfg::contract_pair(nfg::delta_eq(z2, 2), h, std::vector<nfg::PortPair>{{1, 0}});
  CHECK(id == h);

  const auto outer = nfg::contract_pair(LocalFunction({z2}, vals({1, 2})), LocalFunction({z2}, vals({3, 4})), {});
  CHECK(outer.values() == vals({3, 4, 6, 8}));

  CHECK_THROWS_AS(nfg::contract_pair(f, LocalFunction({Alphabet::parse("Z3")}, vals({1, 1, 1})), full), nfg::Error);
  CHECK_THROWS_AS(nfg::contract_pair(f, g, std::vector<nfg::PortPair>{{0, 1}}), nfg::Error);
}

TEST_CASE("contract_pair agrees with explicit summation") {
  const auto a2 = Alphabet::plain(2);
  const auto a3 = Alphabet::plain(3);
  std::vector<Scalar> fv(12), gv(18);
  for (size_t i = 0; i < fv.size(); ++i) fv[i] = Scalar(i + 1.0, 0.5 * i);
  for (size_t i = 0; i < gv.size(); ++i) gv[i] = Scalar(1.0 - i, 2.0);
  const LocalFunction f({a2, a3, a2}, fv);  // f(a, b, c)
  const LocalFunction g({a3, a2, a3}, gv);  // g(d, e, k)
  // pair f.b with g.k and f.c with g.e -> result (a, d)
  const auto r = nfg::contract_pair(f, g, std::vector<nfg::PortPair>{{1, 2}, {2, 1}});
  REQUIRE(r.arity() == 2);
  for (size_t a = 0; a < 2; ++a)
    for (size_t d = 0; d < 3; ++d) {
      Scalar s{};
      for (size_t b = 0; b < 3; ++b)
        for (size_t c = 0; c < 2; ++c) s += fv[a * 6 + b * 2 + c] * gv[d * 6 + c * 3 + b];
      CHECK(std::abs(r[a * 3 + d] - s) < 1e-12);
    }
}

TEST_CASE("trace and permute") {
  const auto a2 = Alphabet::plain(2);
  const auto a3 = Alphabet::plain(3);
  std::vector<Scalar> v(12);
  for (size_t i = 0; i < v.size(); ++i) v[i] = Scalar(i, -1.0 * i);
  const LocalFunction f({a2, a3, a2}, v);
  const auto t = nfg::trace(f, std::vector<nfg::PortPair>{{0, 2}});
  REQUIRE(t.arity() == 1);
  for (size_t b = 0; b < 3; ++b) CHECK(t[b] == v[0 * 6 + b * 2 + 0] + v[1 * 6 + b * 2 + 1]);
  CHECK_THROWS_AS(nfg::trace(f, std::vector<nfg::PortPair>{{0, 1}}), nfg::Error);

  const std::vector<size_t> order{2, 0, 1};
  const auto p = nfg::permute(f, order);
  CHECK(p.ports() == std::vector<Alphabet>{a2, a2, a3});
  for (size_t a = 0; a < 2; ++a)
    for (size_t b = 0; b < 3; ++b)
      for (size_t c = 0; c < 2; ++c) CHECK(p[c * 6 + a * 3 + b] == v[a * 6 + b * 2 + c]);
}

TEST_CASE("approx_equal uses the normwise tolerance") {
  const auto a2 = Alphabet::plain(2);
  const LocalFunction f({a2}, vals({1e6, 1}));
  const LocalFunction g({a2}, vals({1e6, 1 + 1e-4}));
  CHECK(nfg::approx_equal(f, g));
  CHECK(!nfg::approx_equal(f, nfg::scale(g, 1.001)));
  CHECK(!nfg::approx_equal(f, LocalFunction({Alphabet::parse("Z2")}, vals({1e6, 1}))));
}

TEST_CASE("format_scalar") {
  CHECK(nfg::format_scalar(3.0) == "3+0i");
  CHECK(nfg::format_scalar(Scalar(0.5, -1.25)) == "0.5-1.25i");
  CHECK(nfg::format_scalar(Scalar(-0.0, -0.0)) == "0+0i");
  CHECK(nfg::format_scalar(Scalar(1.0 / 3.0, 0)) == "0.333333333333+0i");
}
