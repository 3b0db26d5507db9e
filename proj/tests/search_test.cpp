/* Copyright 2026 The lammu Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "doctest.h"
#include "lammu/grammar.hpp"
#include "lammu/search.hpp"

using namespace lammu;

namespace {

Judgment J(const char* s) { return parse_judgment(s, Language::IU); }

SearchBudget depth(std::size_t d) {
  SearchBudget b;
  b.depth = d;
  return b;
}

}  // namespace

TEST_CASE("no choice") {
  SearchResult r =
      derive(J("|- mu d.[d] (\\x.mu b.[d] x) : A \\/ (A -> B) |"), depth(6));
  REQUIRE(r);
  CHECK(check_derivation(*r.derivation));
  CHECK(r.derivation->size() == 4);

  SearchResult a = derive(J("|- mu d.[d] (\\x.mu b.[d] x) : A |"), depth(6));
  CHECK_FALSE(a);
  CHECK_FALSE(a.cut);
  SearchResult ab =
      derive(J("|- mu d.[d] (\\x.mu b.[d] x) : A -> B |"), depth(6));
  CHECK_FALSE(ab);
  CHECK_FALSE(ab.cut);
}

TEST_CASE("top is immediate") {
  SearchResult r = derive(J("|- (\\x.x x) (\\x.x x) : top |"), depth(1));
  REQUIRE(r);
  CHECK(r.derivation->rule == DRule::InterI);
  CHECK(r.derivation->premises.empty());
}

TEST_CASE("no union elimination on variables") {
  for (std::size_t d : {1u, 4u, 8u}) {
    SearchResult r = derive(J("x:A \\/ B |- x : A |"), depth(d));
    CHECK_FALSE(r);
    CHECK_FALSE(r.cut);
  }
  CHECK(derive(J("x:A \\/ B |- x : A \\/ B |"), depth(1)));
}

TEST_CASE("applications") {
  SearchResult r = derive(
      J("f:(A -> C) \\/ (B -> D), y:A /\\ B |- f y : C \\/ D |"), depth(4));
  REQUIRE(r);
  CHECK(check_derivation(*r.derivation));
  SearchResult beta = derive(J("y:A |- (\\x.x) y : A |"), depth(4));
  REQUIRE(beta);
  CHECK(check_derivation(*beta.derivation));
  SearchResult k = derive(J("y:A |- (\\x.y) (\\z.z z) : A |"), depth(4));
  REQUIRE(k);
  CHECK(check_derivation(*k.derivation));
}

TEST_CASE("mu with a union in the right environment") {
  SearchResult r = derive(
      J("x:A |- mu a.[b] x : C | b:A \\/ B"), depth(4));
  REQUIRE(r);
  CHECK(check_derivation(*r.derivation));
  CHECK_FALSE(derive(J("x:A |- mu a.[b] x : C | b:B"), depth(4)));
}

TEST_CASE("strict system") {
  LeftEnv g{{Var{"x"}, parse_type("A /\\ B", Language::Strict)}};
  SearchResult r = check_strict(g, parse_term("x"),
                                parse_type("A", Language::Strict), depth(3));
  REQUIRE(r);
  CHECK(check_derivation(*r.derivation));
  SearchResult sa = check_strict(
      {}, parse_term("\\x.x x"),
      parse_type("A /\\ (A -> B) -> B", Language::Strict), depth(4));
  REQUIRE(sa);
  // ArrowI, ArrowE and two projections.
  CHECK(sa.derivation->size() == 4);
  CHECK(check_derivation(*sa.derivation));
  for (std::size_t d = 2; d < 8; ++d)
    CHECK_FALSE(check_strict({}, parse_term("\\x.x"),
                             parse_type("A -> B", Language::Strict), depth(d)));
  CHECK_THROWS_AS(check_strict({}, parse_term("mu a.[a] x"),
                               parse_type("A", Language::Strict), depth(3)),
                  NotPureLambda);
}

TEST_CASE("inversion") {
  auto v = invert(J("x:A /\\ B |- x : A |"));
  REQUIRE(v.size() == 1);
  CHECK(v[0].rule == DRule::InterE);
  CHECK_THROWS_AS(invert(J("|- \\x.x : A |")), EmptyInversion);
  CHECK_THROWS_AS(invert(J("|- x : A |")), EmptyInversion);
  auto app = invert(J("|- f y : A \\/ B |"));
  REQUIRE(app.size() == 1);
  CHECK(app[0].rule == DRule::ArrowE);
  CHECK(app[0].premises.size() == 3);
  CHECK(app[0].premises[0].type.text() == "(?B1 -> A) \\/ (?B2 -> B)");
  CHECK(invert(J("|- x : top |"))[0].rule == DRule::InterI);
}

TEST_CASE("synthesis of variable-headed spines") {
  auto ds = synth(J("f:(A -> B) /\\ (C -> D), y:A /\\ C |- f y : top |").gamma,
                  parse_term("f y"), {}, depth(3));
  REQUIRE(ds.size() == 2);
  for (const auto& d : ds) CHECK(check_derivation(d));
}
