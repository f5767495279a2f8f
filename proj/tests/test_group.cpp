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

#include <cmath>
#include <numbers>

#include "doctest.h"
#include "nfg/error.hpp"
#include "nfg/fourier.hpp"
#include "nfg/group.hpp"
#include "nfg/tensor.hpp"
#include "oracles.hpp"

using nfg::FiniteAbelianGroup;
using nfg::Scalar;

namespace {
const double kPi = std::numbers::pi;
bool close(Scalar a, Scalar b, double eps = 1e-12) { return std::abs(a - b) <= eps; }
}  // namespace

TEST_CASE("group arithmetic") {
  const auto g = FiniteAbelianGroup::parse("Z2xZ3");
  CHECK(g.size() == 6);
  CHECK(g.add(g.make({1, 2}), g.make({1, 2})) == g.make({0, 1}));
  const auto z5 = FiniteAbelianGroup::parse("Z5");
  CHECK(z5.neg(z5.make({2})) == z5.make({3}));
  CHECK(FiniteAbelianGroup().size() == 1);
  CHECK(FiniteAbelianGroup::parse("Z1").size() == 1);
  CHECK(g.make({-1, 7}) == g.make({1, 1}));
}

TEST_CASE("index round trip and negation table") {
  const auto g = FiniteAbelianGroup::parse("Z2xZ3xZ4");
  for (size_t i = 0; i < g.size(); ++i) {
    const auto x = g.element_at(i);
    CHECK(g.index_of(x) == i);
    CHECK(g.neg_index(i) == g.index_of(g.neg(x)));
    CHECK(g.add(x, g.neg(x)) == g.zero());
  }
}

TEST_CASE("bad group literals") {
  CHECK_THROWS_AS(FiniteAbelianGroup::parse("Q3"), nfg::Error);
  CHECK_THROWS_AS(FiniteAbelianGroup::parse("Z2x"), nfg::Error);
  CHECK_THROWS_AS(FiniteAbelianGroup::parse(""), nfg::Error);
  CHECK_THROWS_AS(FiniteAbelianGroup({1}), nfg::Error);
  CHECK_THROWS_AS(FiniteAbelianGroup::parse("Z2").add({{0, 0}}, {{1}}), nfg::Error);
}

TEST_CASE("character values") {
  const auto z2 = FiniteAbelianGroup::parse("Z2");
  const auto z3 = FiniteAbelianGroup::parse("Z3");
  CHECK(close(nfg::kappa(z2, z2.make({1}), z2.make({1})), -1.0));
  CHECK(close(nfg::kappa(z3, z3.make({1}), z3.make({1})), std::polar(1.0, 2 * kPi / 3)));
  for (int xh = 0; xh < 3; ++xh) CHECK(close(nfg::kappa(z3, z3.zero(), z3.make({xh})), 1.0));
  CHECK(close(nfg::kappa_hat(z2, z2.make({1}), z2.make({1})), -0.5));
  CHECK(close(nfg::kappa_hat(z3, z3.make({1}), z3.make({1})), std::polar(1.0, -2 * kPi / 3) / 3.0));
  Scalar s{};
  for (int y = 0; y < 2; ++y) s += nfg::kappa(z2, z2.zero(), z2.make({y})) * nfg::kappa_hat(z2, z2.make({1}), z2.make({y}));
  CHECK(close(s, 0.0));
}

TEST_CASE("kappa and kappa_hat are mutually inverse") {
  for (const char* lit : {"Z2", "Z3", "Z4", "Z2xZ2", "Z2xZ3"}) {
    const auto g = FiniteAbelianGroup::parse(lit);
    const auto k = nfg::kappa_table(g);
    const auto kh = nfg::kappa_hat_table(g);
    const size_t n = g.size();
    for (size_t x = 0; x < n; ++x)
      for (size_t xp = 0; xp < n; ++xp) {
        Scalar s{};
        for (size_t y = 0; y < n; ++y) s += k[x * n + y] * kh[xp * n + y];
        CHECK(close(s, x == xp ? 1.0 : 0.0, 1e-12));
      }
  }
}

TEST_CASE("character is bilinear") {
  const auto g = FiniteAbelianGroup::parse("Z3xZ4");
  for (size_t a = 0; a < g.size(); ++a)
    for (size_t b = 0; b < g.size(); ++b)
      for (size_t c = 0; c < g.size(); c += 5) {
        const auto x = g.element_at(a), y = g.element_at(b), h = g.element_at(c);
        CHECK(close(nfg::kappa(g, g.add(x, y), h), nfg::kappa(g, x, h) * nfg::kappa(g, y, h)));
      }
}

TEST_CASE("fourier transform") {
  const auto z2 = nfg::Alphabet::parse("Z2");
  const auto z3 = nfg::Alphabet::parse("Z3");
  // delta_eq on Z2 x Z2 maps to 2 delta_plus; the inverse maps it to delta_plus / 2
  const auto f = nfg::fourier(nfg::delta_eq(z2, 2));
  CHECK(nfg::approx_equal(f, nfg::scale(nfg::delta_plus(z2), 2.0)));
  const auto fi = nfg::fourier(nfg::delta_eq(z2, 2), nfg::FourierDirection::kInverse);
  CHECK(nfg::approx_equal(fi, nfg::scale(nfg::delta_plus(z2), 0.5)));

  const auto c = nfg::fourier(nfg::LocalFunction({z3}, {1.0, 1.0, 1.0}));
  CHECK(close(c[0], 3.0));
  CHECK(close(c[1], 0.0));
  CHECK(close(c[2], 0.0));

  const nfg::LocalFunction g({z2}, {Scalar(0.3, -1.0), Scalar(2.5, 0.25)});
  CHECK(nfg::approx_equal(nfg::fourier(nfg::fourier(g), nfg::FourierDirection::kInverse), g));

  CHECK_THROWS_AS(nfg::fourier(nfg::LocalFunction({nfg::Alphabet::plain(2)}, {1.0, 2.0})), nfg::Error);
}

TEST_CASE("fourier matches a direct DFT and round-trips on mixed ports") {
  const auto z3 = nfg::Alphabet::parse("Z3");
  const auto z4 = nfg::Alphabet::parse("Z4");
  std::vector<Scalar> v(12);
  for (size_t i = 0; i < v.size(); ++i) v[i] = Scalar(std::sin(1.0 + i), std::cos(2.0 * i));
  const nfg::LocalFunction f({z3, z4}, v);
  const auto F = nfg::fourier(f);
  CHECK(nfg::oracle::rel_err(F.values(), nfg::oracle::dft_cyclic(v, {3, 4})) < 1e-12);
  CHECK(nfg::approx_equal(nfg::fourier(F, nfg::FourierDirection::kInverse), f));
}

TEST_CASE("fourier on a product group port is separable") {
  const auto z2 = nfg::Alphabet::parse("Z2");
  const auto z2z2 = nfg::Alphabet::parse("Z2xZ2");
  const std::vector<Scalar> v{1.0, Scalar(0, 2), -3.0, 0.5};
  CHECK(nfg::approx_equal(nfg::fourier(nfg::LocalFunction({z2z2}, v)).values(),
                          nfg::fourier(nfg::LocalFunction({z2, z2}, v)).values()));
}
