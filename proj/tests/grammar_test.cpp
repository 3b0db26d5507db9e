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

#include <random>

#include "doctest.h"
#include "lammu/grammar.hpp"

using namespace lammu;

namespace {

Term v(const char* x) { return Term::var(Var{x}); }
Term ap(Term f, Term a) { return Term::app(std::move(f), std::move(a)); }

Term random_term(std::mt19937_64& rng, int depth) {
  static const char* xs[] = {"x", "y", "z'", "f"};
  static const char* as[] = {"a", "b", "c"};
  auto pick = [&](int n) { return static_cast<int>(rng() % n); };
  int k = depth <= 0 ? 0 : pick(4);
  switch (k) {
    case 0: return v(xs[pick(4)]);
    case 1: return Term::abs(Var{xs[pick(4)]}, random_term(rng, depth - 1));
    case 2: return ap(random_term(rng, depth - 1), random_term(rng, depth - 1));
    default:
      return Term::mu(Name{as[pick(3)]}, Name{as[pick(3)]},
                      random_term(rng, depth - 1));
  }
}

Type random_type(std::mt19937_64& rng, int depth) {
  auto pick = [&](int n) { return static_cast<int>(rng() % n); };
  int k = depth <= 0 ? pick(2) : pick(5);
  switch (k) {
    case 0: return Type::var(pick(2) ? "A" : "B");
    case 1: return pick(2) ? Type::top() : Type::bottom();
    case 2:
      return Type::arrow(random_type(rng, depth - 1),
                         random_type(rng, depth - 1));
    default: {
      std::vector<Type> ps;
      for (int n = pick(4); n > 0; --n) ps.push_back(random_type(rng, depth - 1));
      return k == 3 ? Type::inter(ps) : Type::union_of(ps);
    }
  }
}

}  // namespace

TEST_CASE("parse terms") {
  CHECK(parse_term("\\x.\\y.x y") ==
        Term::abs(Var{"x"}, Term::abs(Var{"y"}, ap(v("x"), v("y")))));
  CHECK(parse_term("x y z") == ap(ap(v("x"), v("y")), v("z")));
  Term peirce_body = parse_term("mu a.[a] (x (\\y. mu b.[a] y))");
  CHECK(peirce_body ==
        Term::mu(Name{"a"}, Name{"a"},
                 ap(v("x"), Term::abs(Var{"y"}, Term::mu(Name{"b"}, Name{"a"},
                                                         v("y"))))));
  CHECK(parse_term("\xCE\xBBx.\xCE\xBC\xCE\xB1.[\xCE\xB2]x") ==
        Term::abs(Var{"x"},
                  Term::mu(Name{"\xCE\xB1"}, Name{"\xCE\xB2"}, v("x"))));
  CHECK(parse_term("mu a.['b] x") == Term::mu(Name{"a"}, Name{"b"}, v("x")));
  CHECK(parse_term("x \\y.y z") ==
        ap(v("x"), Term::abs(Var{"y"}, ap(v("y"), v("z")))));
}

TEST_CASE("parse errors carry spans and expectations") {
  try {
    parse_term("\\x.(x y");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.span().start == 7);
    CHECK(e.expected().count("')'") == 1);
  }
  CHECK_THROWS_AS(parse_term("alpha"), ParseError);
  CHECK_THROWS_AS(parse_term("X"), ParseError);
  CHECK_THROWS_AS(parse_term(""), ParseError);
  CHECK_THROWS_AS(parse_term("x )"), ParseError);
  CHECK_THROWS_AS(parse_term("x # y"), ParseError);
  CHECK_THROWS_AS(parse_term(std::string(5000, '(') + "x" +
                             std::string(5000, ')')),
                  ParseError);
}

TEST_CASE("parse types") {
  Type p = parse_type("((A->B)->A)->A", Language::Curry);
  CHECK(p.text() == "((A -> B) -> A) -> A");
  Type s = parse_type("top -> B", Language::Strict);
  CHECK(s.is_arrow());
  CHECK(s.left().is_top());
  Type u = parse_type("A \\/ (A -> B)", Language::IU);
  CHECK(u.is_union());
  CHECK(u.parts().size() == 2);
  CHECK(parse_type("A \xE2\x88\xA9 B \xE2\x86\x92 C", Language::IU).text() ==
        "A /\\ B -> C");
  CHECK_THROWS_AS(parse_type("A \\/ B", Language::Curry), LanguageViolation);
  CHECK_THROWS_AS(parse_type("A /\\ B \\/ C", Language::IU), ParseError);
  CHECK_THROWS_AS(parse_type("bot -> A", Language::Curry), LanguageViolation);
}

TEST_CASE("print terms") {
  CHECK(print_term(Term::abs(Var{"x"}, v("x"))) == "\\x.x");
  CHECK(print_term(ap(ap(v("x"), v("y")), v("z"))) == "x y z");
  CHECK(print_term(Term::mu(Name{"a"}, Name{"b"}, v("x"))) == "mu a.[b] x");
  CHECK(print_term(ap(v("x"), ap(v("y"), v("z")))) == "x (y z)");
  CHECK(print_term(ap(Term::abs(Var{"x"}, v("x")), v("y"))) == "(\\x.x) y");
}

TEST_CASE("judgments") {
  Judgment j = parse_judgment(
      "x:A /\\ B, y:C |- x y : A \\/ B | a:C, b:bot", Language::IU);
  CHECK(j.gamma.size() == 2);
  CHECK(j.delta.size() == 2);
  CHECK(print_judgment(j) == "x:A /\\ B, y:C |- x y : A \\/ B | a:C, b:bot");
  Judgment e = parse_judgment("|- \\x.x : A -> A |", Language::Curry);
  CHECK(print_judgment(e) == "|- \\x.x : A -> A |");
  CHECK(parse_judgment("|- \\x.x : A -> A", Language::Curry).delta.empty());
  CHECK_THROWS_AS(parse_judgment("|- x : A | a:A /\\ B", Language::IU),
                  LanguageViolation);
  CHECK_THROWS_AS(parse_judgment("x:A, x:B |- x : A |", Language::IU),
                  ParseError);
}

TEST_CASE("positions") {
  CHECK(parse_position("/").empty());
  CHECK(parse_position("/0/1") == Position{0, 1});
  CHECK_THROWS_AS(parse_position("0/1"), ParseError);
  CHECK_THROWS_AS(parse_position("/a"), ParseError);
}

TEST_CASE("round trips") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 300; ++i) {
    Term t = random_term(rng, 5);
    CHECK(alpha_eq(parse_term(print_term(t)), t));
  }
  for (int i = 0; i < 300; ++i) {
    Type t = random_type(rng, 3);
    if (!well_formed(t, Language::IU)) continue;
    Type back = parse_type(print_type(t), Language::IU);
    CHECK(canonicalize(back) == canonicalize(t));
  }
}
