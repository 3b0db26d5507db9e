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
#include "lammu/transform.hpp"

using namespace lammu;

namespace {

Judgment J(const char* s) { return parse_judgment(s, Language::IU); }
Type T(const char* s) { return canonicalize(parse_type(s, Language::IU)); }
Term M(const char* s) { return parse_term(s); }

Derivation found(const char* s) {
  SearchBudget b;
  b.depth = 10;
  SearchResult r = derive(J(s), b);
  REQUIRE_MESSAGE(r, s);
  REQUIRE(check_derivation(*r.derivation));
  return *r.derivation;
}

void require_valid(const Derivation& d) {
  CheckResult c = check_derivation(d);
  INFO(c.describe());
  INFO(render_derivation(d));
  REQUIRE(c.ok);
}

// Reduces at the first redex of `rule`, checks the result, then expands it
// back and checks again.
void round_trip(const char* s, Rule rule) {
  Derivation d = found(s);
  const Term& m = d.conclusion.term;
  auto rs = redexes(m, RuleSet{rule});
  REQUIRE(!rs.empty());
  const Position& pos = rs.front().pos;
  Derivation r = subject_reduction(d, pos, rule);
  require_valid(r);
  CHECK(r.conclusion.term == step(m, pos, rule));
  CHECK(env_equal(r.conclusion.gamma, d.conclusion.gamma));
  CHECK(canonicalize(r.conclusion.type) == canonicalize(d.conclusion.type));

  Derivation e = subject_expansion(r, m, pos, rule);
  require_valid(e);
  CHECK(e.conclusion.term == m);
  CHECK(canonicalize(e.conclusion.type) == canonicalize(d.conclusion.type));
}

}  // namespace

TEST_CASE("inter_elim") {
  Derivation d = found("x:A /\\ B |- x : A /\\ B |");
  Derivation a = inter_elim(d, 0);
  require_valid(a);
  CHECK(a.conclusion.type == T("A"));
  CHECK(inter_elim(d, 1).conclusion.type == T("B"));
  CHECK_THROWS_AS(inter_elim(d, 2), IndexOutOfRange);
  Derivation top = found("|- \\x.x : top |");
  CHECK_THROWS_AS(inter_elim(top, 0), IndexOutOfRange);
  Derivation strict = found("x:A |- x : A |");
  CHECK(inter_elim(strict, 0).conclusion == strict.conclusion);
}

TEST_CASE("thin drops unused bindings") {
  Derivation d = found("y:B, z:C |- \\x.x : A -> A | a:B");
  Derivation t = thin(d);
  require_valid(t);
  CHECK(t.conclusion.gamma.empty());
  CHECK(t.conclusion.delta.empty());

  Derivation u = thin(found("y:B, x:A |- (\\z.x) y : A |"));
  require_valid(u);
  CHECK(u.conclusion.gamma.size() == 2);
}

TEST_CASE("weaken") {
  Derivation d = found("x:A |- \\y.x : B -> A |");
  LeftEnv g = d.conclusion.gamma;
  g.insert_or_assign(Var{"x"}, T("A /\\ C"));
  g.insert_or_assign(Var{"w"}, T("D"));
  RightEnv dl{{Name{"a"}, T("E")}};
  Derivation w = weaken(d, g, dl);
  require_valid(w);
  CHECK(w.conclusion.gamma.size() == 2);
  // The leaf is re-projected, not wrapped.
  CHECK(w.premises[0].rule == DRule::InterE);

  LeftEnv bad{{Var{"x"}, T("C")}};
  CHECK_THROWS_AS(weaken(d, bad, {}), PreconditionViolation);
}

TEST_CASE("weaken leaves a node when no exact component exists") {
  Derivation d = found("x:A \\/ B |- x : A \\/ B |");
  LeftEnv g{{Var{"x"}, T("A")}};
  Derivation w = weaken(d, g, {});
  require_valid(w);
  CHECK(w.rule == DRule::Weaken);
}

TEST_CASE("realign follows alpha-equivalence") {
  Derivation d = found("z:A |- (\\x.\\y.x) z : B -> A |");
  Derivation r = realign(d, M("(\\u.\\v.u) z"));
  require_valid(r);
  CHECK_THROWS_AS(realign(d, M("(\\u.\\v.v) z")), PreconditionViolation);
}

TEST_CASE("subject reduction and expansion for beta") {
  round_trip("x:A |- (\\y.y) x : A |", Rule::Beta);
  round_trip("f:A -> A -> B, x:A |- (\\y.f y y) x : B |", Rule::Beta);
  round_trip("x:A /\\ B |- (\\y.y) x : A /\\ B |", Rule::Beta);
  round_trip("x:A |- (\\y.\\x.y) x : B -> A |", Rule::Beta);
  round_trip("z:A |- \\w.(\\y.w) z : B -> B |", Rule::Beta);
  round_trip("|- (\\y.\\z.z) (\\x.x x) : A -> A |", Rule::Beta);
}

TEST_CASE("subject reduction and expansion for mu") {
  round_trip("z:A, w:C |- (mu a.[b] \\x.z) w : A | b:C -> A", Rule::Mu);
  round_trip("z:A, w:C |- (mu a.[a] \\x.z) w : A |", Rule::Mu);
  round_trip("z:A, w:C |- (mu a.[b] \\x.mu c.[a] \\y.z) w : A | b:C -> A",
             Rule::Mu);
}

TEST_CASE("subject reduction and expansion for renaming") {
  round_trip("z:A |- mu a.[a] mu b.[b] z : A |", Rule::Renaming);
  round_trip("z:A |- mu a.[c] mu b.[a] z : A | c:A", Rule::Renaming);
  round_trip("z:A |- mu a.[a] mu b.[c] z : A | c:A", Rule::Renaming);
}

TEST_CASE("term substitution lemma both ways") {
  Derivation dm = found("f:A -> A -> B, x:A /\\ C, y:A /\\ C |- f x x : B |");
  Derivation dn = found("y:A /\\ C |- y : A /\\ C |");
  Derivation s = term_subst_lemma(dm, Var{"x"}, dn);
  require_valid(s);
  CHECK(s.conclusion.term == M("f y y"));
  CHECK(s.conclusion.gamma.count(Var{"x"}) == 0);

  TermSubstWitness w = term_subst_decompose(s, M("f x x"), Var{"x"}, M("y"));
  require_valid(w.dm);
  require_valid(w.dn);
  CHECK(w.c == T("A"));
}

TEST_CASE("structural substitution lemma both ways") {
  Derivation dm = found("z:B, w:A |- mu c.[a] \\x.z : D | a:A -> B");
  Derivation dn = found("w:A |- w : A |");
  Derivation s =
      struct_subst_lemma(dm, Name{"a"}, M("w"), {dn}, Name{"g"});
  require_valid(s);
  CHECK(s.conclusion.term == M("mu c.[g] (\\x.z) w"));

  StructSubstWitness w =
      struct_subst_decompose(s, M("mu c.[a] \\x.z"), Name{"a"}, M("w"),
                             Name{"g"});
  require_valid(w.dm);
  for (const auto& x : w.dn) require_valid(x);
}

TEST_CASE("bot in the self case blocks the construction") {
  // (mu a.[a] mu b.[c] x) y : D where the body of the outer mu has type bot.
  Judgment root = J("x:A, y:C |- (mu a.[a] mu b.[c] x) y : D | c:A");
  const LeftEnv& g = root.gamma;
  RightEnv dl = root.delta;
  Type f = T("C -> D");
  RightEnv da = extend(dl, Name{"a"}, f);
  RightEnv dab = extend(da, Name{"b"}, Type::bottom());
  Derivation leaf = make_node({g, M("x"), T("A"), dab}, DRule::InterE, {}, 0);
  Derivation inner = make_node({g, M("mu b.[c] x"), Type::bottom(), da},
                               DRule::UnionENamed, {leaf});
  Derivation fun =
      make_node({g, M("mu a.[a] mu b.[c] x"), f, dl}, DRule::UnionESelf,
                {inner});
  Derivation arg = make_node({g, M("y"), T("C"), dl}, DRule::InterE, {}, 0);
  Derivation d = make_node(root, DRule::ArrowE, {fun, arg});
  require_valid(d);
  CHECK_THROWS_AS(subject_reduction(d, {}, Rule::Mu), ConstructionFailure);

  // The reduct is still typable; only the transformation fails.
  Judgment reduct = root;
  reduct.term = step(root.term, {}, Rule::Mu);
  SearchBudget b;
  b.depth = 10;
  CHECK(derive(reduct, b));
}

TEST_CASE("reduction inside a context") {
  Derivation d = found("x:A |- \\w.(\\y.y) x : B -> A |");
  Derivation r = subject_reduction(d, {0}, Rule::Beta);
  require_valid(r);
  CHECK(r.conclusion.term == M("\\w.x"));
}
