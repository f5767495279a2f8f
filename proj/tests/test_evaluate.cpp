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

#include <chrono>
#include <numeric>
#include <string>

#include "doctest.h"
#include "nfg/error.hpp"
#include "nfg/evaluate.hpp"
#include "nfg/random.hpp"
#include "oracles.hpp"

using nfg::Alphabet;
using nfg::LocalFunction;
using nfg::NFG;
using nfg::Scalar;

namespace {

const Alphabet z2 = Alphabet::parse("Z2");

NFG closed_pair() {
  return NFG::build({{"f", LocalFunction({z2}, {1.0, 1.0})}, {"g", LocalFunction({z2}, {1.0, 2.0})}},
                    {{{"f", 0}, {"g", 0}}}, {});
}

// x0 - v0 - v1 - ... - v_{n-1} - x1, binary edges.
NFG chain(size_t n, nfg::random::Rng& rng) {
  std::vector<nfg::Vertex> vs;
  std::vector<nfg::InternalEdge> ie;
  for (size_t i = 0; i < n; ++i) vs.push_back({"v" + std::to_string(i), nfg::random::random_function(rng, {z2, z2})});
  for (size_t i = 0; i + 1 < n; ++i) ie.push_back({{"v" + std::to_string(i), 1}, {"v" + std::to_string(i + 1), 0}});
  return NFG::build(std::move(vs), std::move(ie),
                    {{{"v0", 0}, "x0"}, {{"v" + std::to_string(n - 1), 1}, "x1"}});
}

}  // namespace

TEST_CASE("closed pair evaluates to 3 in both modes") {
  CHECK(nfg::eval_exterior(closed_pair(), nfg::EvalMode::kBrute).value() == Scalar(3.0));
  CHECK(nfg::eval_exterior(closed_pair(), nfg::EvalMode::kEliminate).value() == Scalar(3.0));
}

TEST_CASE("equality in a chain acts as the identity") {
  const LocalFunction g({z2, z2}, {Scalar(1, 2), 3.0, Scalar(0, -1), 0.25});
  const auto n = NFG::build({{"f", nfg::delta_eq(z2, 2)}, {"g", g}}, {{{"f", 1}, {"g", 0}}},
                            {{{"f", 0}, "x1"}, {{"g", 1}, "x2"}});
  CHECK(nfg::approx_equal(nfg::eval_exterior(n), g));
}

TEST_CASE("five-vertex example has exterior ports (x1, x2)") {
  // f1(x1,x3,x4) f2(x3,x5,x6) f3(x2,x4,x5,x7,x8) f4(x6,x7,x9) f5(x8,x9)
  nfg::random::Rng rng(5);
  const Alphabet z3 = Alphabet::parse("Z3");
  auto rf = [&](size_t k) { return nfg::random::random_function(rng, std::vector<Alphabet>(k, z2)); };
  auto f3ports = std::vector<Alphabet>{z3, z2, z2, z2, z2};
  const auto n = NFG::build(
      {{"f1", rf(3)}, {"f2", rf(3)}, {"f3", nfg::random::random_function(rng, f3ports)}, {"f4", rf(3)}, {"f5", rf(2)}},
      {{{"f1", 1}, {"f2", 0}},
       {{"f1", 2}, {"f3", 1}},
       {{"f2", 1}, {"f3", 2}},
       {{"f2", 2}, {"f4", 0}},
       {{"f3", 3}, {"f4", 1}},
       {{"f3", 4}, {"f5", 0}},
       {{"f4", 2}, {"f5", 1}}},
      {{{"f1", 0}, "x1"}, {{"f3", 0}, "x2"}});
  const auto z = nfg::eval_exterior(n);
  CHECK(z.ports() == std::vector<Alphabet>{z2, z3});
  CHECK(nfg::oracle::rel_err(z.values(), nfg::oracle::exterior(n)) < 1e-12);
  CHECK(nfg::oracle::rel_err(nfg::eval_brute(n).values(), nfg::oracle::exterior(n)) < 1e-12);
}

TEST_CASE("default elimination order") {
  nfg::random::Rng rng(6);
  CHECK(nfg::default_elimination_order(chain(3, rng)).size() == 2);
  const auto single = NFG::build({{"f", LocalFunction({z2}, {1.0, 2.0})}}, {}, {{{"f", 0}, "x"}});
  CHECK(nfg::default_elimination_order(single).empty());
  for (int t = 0; t < 20; ++t) {
    nfg::random::NfgShape shape;
    shape.max_vertices = 6;
    const auto g = nfg::random::random_nfg(rng, shape);
    auto order = nfg::default_elimination_order(g);
    CHECK(order.size() == g.internal_edges().size());
    CHECK(nfg::relative_deviation(nfg::eval_eliminate(g, order).values(), nfg::eval_brute(g).values()) < 1e-10);
  }
}

TEST_CASE("any permutation of the edges is a valid order") {
  nfg::random::Rng rng(7);
  for (int t = 0; t < 10; ++t) {
    const auto g = nfg::random::random_nfg(rng);
    std::vector<size_t> order(g.internal_edges().size());
    std::iota(order.rbegin(), order.rend(), size_t{0});
    CHECK(nfg::relative_deviation(nfg::eval_eliminate(g, order).values(), nfg::oracle::exterior(g)) < 1e-10);
  }
}

TEST_CASE("bad elimination orders") {
  nfg::random::Rng rng(8);
  const auto g = chain(4, rng);
  const std::vector<size_t> missing{0, 1};
  const std::vector<size_t> twice{0, 1, 1};
  const std::vector<size_t> bogus{0, 1, 7};
  for (const auto* o : {&missing, &twice, &bogus}) {
    try {
      nfg::eval_eliminate(g, *o);
      FAIL("accepted a bad order");
    } catch (const nfg::Error& e) {
      CHECK(e.code() == nfg::ErrorCode::kInvalidEliminationOrder);
    }
  }
}

TEST_CASE("property: brute == eliminate == oracle on random NFGs") {
  nfg::random::Rng rng(9);
  for (int t = 0; t < 60; ++t) {
    const auto g = nfg::random::random_nfg(rng);
    const auto ref = nfg::oracle::exterior(g);
    const auto b = nfg::eval_exterior(g, nfg::EvalMode::kBrute);
    const auto e = nfg::eval_exterior(g, nfg::EvalMode::kEliminate);
    CHECK(b.ports() == g.external_alphabets());
    CHECK(e.ports() == g.external_alphabets());
    CHECK(nfg::oracle::rel_err(b.values(), ref) < 1e-10);
    CHECK(nfg::oracle::rel_err(e.values(), ref) < 1e-10);
  }
}

TEST_CASE("caps are enforced with the offending size") {
  nfg::random::Rng rng(10);
  const auto g = chain(12, rng);
  nfg::EvalOptions tight;
  tight.brute_cap = 1000;
  try {
    nfg::eval_brute(g, tight);
    FAIL("cap not enforced");
  } catch (const nfg::Error& e) {
    CHECK(e.code() == nfg::ErrorCode::kCapExceeded);
    CHECK(std::string(e.what()).find("8192") != std::string::npos);
  }
  nfg::EvalOptions tiny;
  tiny.tensor_cap = 2;
  CHECK_THROWS_AS(nfg::eval_exterior(g, nfg::EvalMode::kEliminate, tiny), nfg::Error);
}

TEST_CASE("20-vertex chain eliminates fast and matches brute force") {
  nfg::random::Rng rng(20);
  const auto g = chain(20, rng);
  const auto t0 = std::chrono::steady_clock::now();
  const auto e = nfg::eval_exterior(g, nfg::EvalMode::kEliminate);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  CHECK(secs < 1.0);
  const auto b = nfg::eval_exterior(g, nfg::EvalMode::kBrute);  // 2^19 internal configurations
  CHECK(nfg::relative_deviation(e.values(), b.values()) < 1e-10);
}
