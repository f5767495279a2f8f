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

#include <map>

#include "doctest.h"
#include "nfg/error.hpp"
#include "nfg/evaluate.hpp"
#include "nfg/marked.hpp"
#include "nfg/random.hpp"
#include "oracles.hpp"

using namespace nfg;

namespace {

const Alphabet z2 = Alphabet::parse("Z2");

MarkedVariable var(const std::string& name, Mark m) { return {name, z2, m}; }

// f1(x1,x2,x3) f2(x1,x3,x4,x5) f3(x1,x3,x4,x5), summed over x1 and x4.
MarkedFactorGraph three_factor_example(random::Rng& rng) {
  auto rf = [&](size_t k) { return random::random_function(rng, std::vector<Alphabet>(k, z2)); };
  return MarkedFactorGraph::build(
      {var("x1", Mark::kInternal), var("x2", Mark::kExternal), var("x3", Mark::kExternal),
       var("x4", Mark::kInternal), var("x5", Mark::kExternal)},
      {{"f1", rf(3), {"x1", "x2", "x3"}}, {"f2", rf(4), {"x1", "x3", "x4", "x5"}},
       {"f3", rf(4), {"x1", "x3", "x4", "x5"}}});
}

std::map<std::string, size_t> equality_arities(const NFG& g) {
  std::map<std::string, size_t> out;
  for (const auto& v : g.vertices())
    if (v.id.rfind("eq:", 0) == 0) out[v.id.substr(3)] = v.function.arity();
  return out;
}

ErrorCode first_issue(auto&& f) {
  try {
    f();
  } catch (const ValidationError& e) {
    return e.issues().front().code;
  }
  FAIL("no validation error");
  return ErrorCode::kInvalidArgument;
}

}  // namespace

TEST_CASE("three-factor example: replicated variables and exterior") {
  random::Rng rng(1);
  const auto m = three_factor_example(rng);
  const auto g = normalize(m);
  const auto ar = equality_arities(g);
  CHECK(ar.at("x1") == 3);
  CHECK(ar.at("x3") == 4);
  CHECK(ar.at("x5") == 3);
  // x4 meets exactly two factors and is summed: it stays a plain edge.
  CHECK(ar.count("x4") == 0);
  CHECK(ar.count("x2") == 0);
  CHECK(g.dangling_edges().size() == 3);
  CHECK(g.dangling_edges()[0].label == "x2");
  CHECK(g.dangling_edges()[0].at == PortRef{"f1", 1});
  CHECK(oracle::rel_err(eval_exterior(g).values(), oracle::marked_exterior(m)) < 1e-12);
}

TEST_CASE("already-normal input gains no equality vertices") {
  random::Rng rng(2);
  auto rf = [&](size_t k) { return random::random_function(rng, std::vector<Alphabet>(k, z2)); };
  const auto m = MarkedFactorGraph::build({var("a", Mark::kExternal), var("s", Mark::kInternal), var("b", Mark::kExternal)},
                                          {{"f", rf(2), {"a", "s"}}, {"g", rf(2), {"s", "b"}}});
  const auto g = normalize(m);
  CHECK(g.vertices().size() == 2);
  CHECK(g.internal_edges().size() == 1);
  CHECK(g.dangling_edges().size() == 2);
  CHECK(oracle::rel_err(eval_exterior(g).values(), oracle::marked_exterior(m)) < 1e-12);
}

TEST_CASE("property: random marked graphs") {
  random::Rng rng(3);
  for (int t = 0; t < 60; ++t) {
    const auto m = random::random_marked(rng);
    const auto g = normalize(m);
    for (const auto& v : g.vertices()) {
      if (v.id.rfind("eq:", 0) != 0) continue;
      CHECK(v.function == delta_eq(z2, v.function.arity()));
    }
    CHECK(oracle::rel_err(eval_exterior(g).values(), oracle::marked_exterior(m)) < 1e-10);
  }
}

TEST_CASE("marked graph validation") {
  const auto f2 = delta_eq(z2, 2);
  const LocalFunction f1({z2}, {1.0, 1.0});
  CHECK(first_issue([&] {
          MarkedFactorGraph::build({var("a", Mark::kExternal), var("u", Mark::kInternal)}, {{"f", f1, {"a"}}});
        }) == ErrorCode::kUnusedVariable);
  CHECK(first_issue([&] {
          MarkedFactorGraph::build({var("a", Mark::kExternal), var("s", Mark::kInternal)}, {{"f", f2, {"a", "s"}}});
        }) == ErrorCode::kDegreeOneInternal);
  CHECK(first_issue([&] { MarkedFactorGraph::build({var("a", Mark::kExternal)}, {{"f", f2, {"a"}}}); }) ==
        ErrorCode::kArityMismatch);
  CHECK(first_issue([&] { MarkedFactorGraph::build({var("a", Mark::kExternal)}, {{"f", f2, {"a", "zz"}}}); }) ==
        ErrorCode::kInvalidArgument);
  CHECK(first_issue([&] {
          MarkedFactorGraph::build({{"a", Alphabet::parse("Z3"), Mark::kExternal}}, {{"f", f1, {"a"}}});
        }) == ErrorCode::kAlphabetMismatch);
  CHECK(first_issue([&] {
          MarkedFactorGraph::build({var("a", Mark::kExternal)},
                                   {{"f", f1, {"a"}}, {"f", f1, {"a"}}});
        }) == ErrorCode::kDuplicateVertex);
}

TEST_CASE("a variable repeated within one factor is replicated") {
  const auto m = MarkedFactorGraph::build({var("a", Mark::kExternal)},
                                          {{"f", LocalFunction({z2, z2}, {1.0, 2.0, 3.0, 4.0}), {"a", "a"}}});
  CHECK(m.degree("a") == 2);
  const auto z = eval_exterior(normalize(m));
  REQUIRE(z.size() == 2);
  CHECK(z[0] == Scalar(1.0));
  CHECK(z[1] == Scalar(4.0));
}
