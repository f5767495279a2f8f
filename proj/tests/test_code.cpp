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
#include "nfg/code.hpp"
#include "nfg/duality.hpp"
#include "nfg/error.hpp"
#include "nfg/evaluate.hpp"

using namespace nfg;

namespace {

std::vector<FiniteAbelianGroup> z2s(size_t n) { return std::vector<FiniteAbelianGroup>(n, FiniteAbelianGroup::parse("Z2")); }

Codeword word(std::initializer_list<int> bits) {
  Codeword w;
  for (int b : bits) w.push_back(GroupElement{{b}});
  return w;
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

}  // namespace

TEST_CASE("code indicators") {
  const GroupCode c(z2s(2), {word({0, 0}), word({1, 1})});
  CHECK(code_indicator(c).values() == std::vector<Scalar>{1.0, 0.0, 0.0, 1.0});
  const auto zero = code_indicator(GroupCode::zero(z2s(3)));
  for (size_t i = 0; i < 8; ++i) CHECK(zero[i] == Scalar(i == 0 ? 1.0 : 0.0));
  const auto full = code_indicator(GroupCode::full({FiniteAbelianGroup::parse("Z3"), FiniteAbelianGroup::parse("Z2")}));
  for (size_t i = 0; i < 6; ++i) CHECK(full[i] == Scalar(1.0));
}

TEST_CASE("subgroup checks") {
  CHECK(code_of([] { GroupCode(z2s(2), {word({1, 1})}); }) == ErrorCode::kInvalidCode);
  CHECK(code_of([] { GroupCode(z2s(3), {word({0, 0, 0}), word({1, 0, 0}), word({0, 1, 0})}); }) ==
        ErrorCode::kInvalidCode);
  CHECK(code_of([] { GroupCode(z2s(2), {word({0, 0, 0})}); }) == ErrorCode::kInvalidCode);
  const auto g = GroupCode::from_generators(z2s(3), {word({1, 0, 0}), word({0, 1, 0})});
  CHECK(g.size() == 4);
  CHECK(GroupCode::repetition(3) == GroupCode(z2s(3), {word({0, 0, 0}), word({1, 1, 1})}));
  CHECK(GroupCode::repetition(2, 3).size() == 3);
  CHECK(GroupCode::hamming74().size() == 16);
}

TEST_CASE("brute dual codes") {
  const auto rep = GroupCode::repetition(3);
  const auto even = dual_code_brute(rep);
  CHECK(even.size() == 4);
  for (const auto& w : even.codewords()) {
    int weight = 0;
    for (const auto& s : w) weight += s.residues[0];
    CHECK(weight % 2 == 0);
  }
  const GroupCode c(z2s(2), {word({0, 0}), word({1, 1})});
  CHECK(dual_code_brute(c) == c);
  CHECK(dual_code_brute(GroupCode::full(z2s(3))) == GroupCode::zero(z2s(3)));

  // |C| |C^perp| = |ambient| and the dual of the dual is C, also over Z3 x Z4 symbols
  const std::vector<FiniteAbelianGroup> amb{FiniteAbelianGroup::parse("Z3"), FiniteAbelianGroup::parse("Z4"),
                                            FiniteAbelianGroup::parse("Z2xZ2")};
  const auto mixed = GroupCode::from_generators(amb, {{GroupElement{{1}}, GroupElement{{2}}, GroupElement{{1, 0}}}});
  const auto perp = dual_code_brute(mixed);
  CHECK(static_cast<double>(mixed.size() * perp.size()) == mixed.ambient_size());
  CHECK(dual_code_brute(perp) == mixed);
  CHECK(code_of([] { dual_code_brute(GroupCode::repetition(12), 100); }) == ErrorCode::kCapExceeded);
}

TEST_CASE("repetition code dualizes to 2 times the even-weight indicator") {
  const auto rep = GroupCode::repetition(3);
  const auto z = eval_exterior(dualize(code_nfg(rep)));
  const auto even = dual_code_brute(rep);
  for (size_t i = 0; i < 8; ++i) CHECK(std::abs(z[i] - (even.contains(i) ? 2.0 : 0.0)) <= 1e-10);
  const auto r = verify_code_duality(code_nfg(rep), rep);
  CHECK(r.ok);
  CHECK(r.dual_scale == doctest::Approx(2.0));
  CHECK(r.dual_size == 4);
}

TEST_CASE("Hamming code dualizes to 16 times the simplex-code indicator") {
  const auto h = GroupCode::hamming74();
  const auto r = verify_code_duality(code_nfg(h), h);
  CHECK(r.ok);
  CHECK(r.scale == doctest::Approx(1.0));
  CHECK(r.dual_scale == doctest::Approx(16.0));
  CHECK(r.predicted_dual_scale == doctest::Approx(16.0));
  CHECK(r.dual_size == 8);
  const auto z = eval_exterior(dualize(code_nfg(h)));
  const auto perp = dual_code_brute(h);
  for (size_t i = 0; i < 128; ++i) CHECK(std::abs(z[i] - (perp.contains(i) ? 16.0 : 0.0)) <= 1e-10);
}

TEST_CASE("two-vertex state realization of {00, 11}") {
  const Alphabet z2 = Alphabet::parse("Z2");
  const auto n = NFG::build({{"f", delta_eq(z2, 2)}, {"g", delta_eq(z2, 2)}}, {{{"f", 1}, {"g", 1}}},
                            {{{"f", 0}, "x1"}, {{"g", 0}, "x2"}});
  const GroupCode c(z2s(2), {word({0, 0}), word({1, 1})});
  const auto r = verify_code_duality(n, c);
  CHECK(r.ok);
  CHECK(r.scale == doctest::Approx(1.0));
  CHECK(r.dual_scale == doctest::Approx(r.predicted_dual_scale));
  CHECK(r.predicted_dual_scale == doctest::Approx(4.0));
}

TEST_CASE("code duality errors") {
  const Alphabet z2 = Alphabet::parse("Z2");
  const GroupCode c(z2s(2), {word({0, 0}), word({1, 1})});
  // not {0,1}-valued
  const auto scaled = NFG::build({{"f", scale(delta_eq(z2, 2), 3.0)}}, {}, {{{"f", 0}, "a"}, {{"f", 1}, "b"}});
  CHECK(code_of([&] { verify_code_duality(scaled, c); }) == ErrorCode::kNotIndicator);
  // wrong support
  const auto other = NFG::build({{"f", delta_plus(Alphabet::parse("Z2"))}, {"g", LocalFunction({z2}, {1.0, 0.0})}},
                                {}, {{{"f", 0}, "a"}, {{"f", 1}, "b"}, {{"g", 0}, "c"}});
  CHECK(code_of([&] { verify_code_duality(other, c); }) == ErrorCode::kAlphabetMismatch);
  const GroupCode zero = GroupCode::zero(z2s(2));
  const auto eq = NFG::build({{"f", delta_eq(z2, 2)}}, {}, {{{"f", 0}, "a"}, {{"f", 1}, "b"}});
  CHECK(code_of([&] { verify_code_duality(eq, zero); }) == ErrorCode::kSupportMismatch);
  // support {00, 01, 11} is not C
  const auto wide = NFG::build(
      {{"f", LocalFunction({z2, z2}, {1.0, 1.0, 0.0, 1.0})}}, {}, {{{"f", 0}, "a"}, {{"f", 1}, "b"}});
  CHECK(code_of([&] { verify_code_duality(wide, c); }) == ErrorCode::kSupportMismatch);
  // right support, but 11 is reached by two internal configurations and 00 by one
  const auto uneven = NFG::build({{"f", LocalFunction({z2, z2, z2}, {1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 1.0})},
                                  {"g", LocalFunction({z2}, {1.0, 1.0})}},
                                 {{{"f", 2}, {"g", 0}}}, {{{"f", 0}, "a"}, {{"f", 1}, "b"}});
  CHECK(code_of([&] { verify_code_duality(uneven, c); }) == ErrorCode::kNotIndicator);
}
