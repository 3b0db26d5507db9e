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
#include "lammu/simple_types.hpp"

using namespace lammu;

namespace {

Judgment J(const char* s) { return parse_judgment(s, Language::Curry); }

const char* kPeirce =
    "|- \\x.mu a.[a] (x (\\y.mu b.[a] y)) : ((A -> B) -> A) -> A |";
const char* kDne =
    "|- \\y.mu a.[b] y (\\x.mu d.[a] x) : ((A -> bot) -> bot) -> A | b:bot";

}  // namespace

TEST_CASE("Peirce's law") {
  SimpleCheck r = check_simple(J(kPeirce));
  REQUIRE(r);
  const SimpleDerivation& d = *r.derivation;
  CHECK(check_simple_derivation(d));
  // ArrowI, Mu, ArrowE, Ax, ArrowI, Mu, Ax.
  CHECK(d.size() == 7);
  CHECK(d.rule == SRule::ArrowI);
  CHECK(d.premises[0].rule == SRule::Mu);
  CHECK(check_derivation(embed_simple(d)));
}

TEST_CASE("double negation keeps b free at type bot") {
  Judgment j = J(kDne);
  SimpleCheck r = check_simple(j);
  REQUIRE(r);
  CHECK(check_simple_derivation(*r.derivation));
  CHECK(free_names(j.term) == NameSet{Name{"b"}});
  CHECK(r.derivation->conclusion.delta.at(Name{"b"}).is_bottom());
  CHECK(check_derivation(embed_simple(*r.derivation)));
  // Without b in the right environment the judgment is rejected.
  SimpleCheck r2 =
      check_simple(J("|- \\y.mu a.[b] y (\\x.mu d.[a] x) : "
                     "((A -> bot) -> bot) -> A |"));
  REQUIRE_FALSE(r2);
  CHECK(r2.failure->rule == SRule::Mu);
}

TEST_CASE("rejections name the rule") {
  SimpleCheck r = check_simple(J("|- \\x.x : A -> B |"));
  REQUIRE_FALSE(r);
  CHECK(r.failure->rule == SRule::Ax);
  SimpleCheck r2 = check_simple(J("|- x : A |"));
  REQUIRE_FALSE(r2);
  CHECK(r2.failure->rule == SRule::Ax);
  SimpleCheck r3 = check_simple(J("|- \\x.x : A |"));
  REQUIRE_FALSE(r3);
  CHECK(r3.failure->rule == SRule::ArrowI);
}

TEST_CASE("unconstrained subterms get fresh type variables") {
  SimpleCheck r = check_simple(J("y:A |- (\\x.y) (\\z.z) : A |"));
  REQUIRE(r);
  CHECK(check_simple_derivation(*r.derivation));
  const Type& arg = r.derivation->premises[1].conclusion.type;
  CHECK(arg.is_arrow());
  CHECK(arg.left().name() != "A");
}

TEST_CASE("inference") {
  InferResult id = infer_simple(parse_term("\\x.x"));
  REQUIRE(id);
  CHECK(id.typing->type.text() == "A -> A");
  InferResult omega = infer_simple(parse_term("\\x.x x"));
  REQUIRE_FALSE(omega);
  CHECK(omega.report->kind == "occurs");
  InferResult p = infer_simple(parse_term("\\x.mu a.[a] (x (\\y.mu b.[a] y))"));
  REQUIRE(p);
  CHECK(p.typing->type.text() == "((A -> B) -> A) -> A");
  InferResult fr = infer_simple(parse_term("mu a.[b] x y"));
  REQUIRE(fr);
  CHECK(fr.typing->gamma.size() == 2);
  CHECK(fr.typing->delta.size() == 1);
  Judgment back{fr.typing->gamma, parse_term("mu a.[b] x y"), fr.typing->type,
                fr.typing->delta};
  CHECK(check_simple(back));
}

TEST_CASE("the verifier rejects tampered derivations") {
  SimpleCheck r = check_simple(J(kPeirce));
  REQUIRE(r);
  SimpleDerivation d = *r.derivation;
  d.premises[0].premises[0].rule = SRule::Ax;
  CheckResult c = check_simple_derivation(d);
  CHECK_FALSE(c);
  CHECK(c.path == std::vector<std::size_t>{0, 0});
}
