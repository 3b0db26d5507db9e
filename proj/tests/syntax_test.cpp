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
#include "lammu/syntax.hpp"

using namespace lammu;

namespace {

Term v(const char* x) { return Term::var(Var{x}); }
Term lam(const char* x, Term b) { return Term::abs(Var{x}, std::move(b)); }
Term ap(Term f, Term a) { return Term::app(std::move(f), std::move(a)); }
Term mu(const char* a, const char* b, Term m) {
  return Term::mu(Name{a}, Name{b}, std::move(m));
}

VarSet vars(std::initializer_list<const char*> xs) {
  VarSet s;
  for (auto x : xs) s.insert(Var{x});
  return s;
}

NameSet names(std::initializer_list<const char*> xs) {
  NameSet s;
  for (auto x : xs) s.insert(Name{x});
  return s;
}

// Random terms over a tiny alphabet so that binders collide often.
Term random_term(std::mt19937_64& rng, int depth) {
  static const char* xs[] = {"x", "y", "z"};
  static const char* as[] = {"a", "b", "c"};
  auto pick = [&](int n) { return static_cast<int>(rng() % n); };
  int k = depth <= 0 ? 0 : pick(4);
  switch (k) {
    case 0: return v(xs[pick(3)]);
    case 1: return lam(xs[pick(3)], random_term(rng, depth - 1));
    case 2: return ap(random_term(rng, depth - 1), random_term(rng, depth - 1));
    default:
      return mu(as[pick(3)], as[pick(3)], random_term(rng, depth - 1));
  }
}

}  // namespace

TEST_CASE("free term variables") {
  CHECK(free_term_vars(v("x")) == vars({"x"}));
  CHECK(free_term_vars(lam("x", v("x"))).empty());
  CHECK(free_term_vars(mu("a", "b", ap(v("x"), v("y")))) == vars({"x", "y"}));
}

TEST_CASE("free names") {
  CHECK(free_names(mu("a", "b", v("x"))) == names({"b"}));
  CHECK(free_names(mu("a", "a", v("x"))).empty());
  CHECK(free_names(mu("a", "b", mu("c", "a", v("y")))) == names({"b"}));
}

TEST_CASE("alpha equivalence") {
  CHECK(alpha_eq(lam("x", v("x")), lam("y", v("y"))));
  CHECK(alpha_eq(mu("a", "a", v("x")), mu("c", "c", v("x"))));
  CHECK_FALSE(alpha_eq(mu("a", "b", v("x")), mu("a", "c", v("x"))));
  CHECK_FALSE(alpha_eq(lam("x", v("y")), lam("y", v("y"))));
  CHECK(alpha_eq(lam("x", lam("y", ap(v("x"), v("y")))),
                 lam("y", lam("x", ap(v("y"), v("x"))))));
}

TEST_CASE("control structures") {
  CHECK(is_control_structure(mu("a", "b", v("x"))));
  CHECK(is_control_structure(ap(mu("a", "b", v("x")), v("y"))));
  CHECK_FALSE(is_control_structure(lam("x", mu("a", "b", v("x")))));
  CHECK_FALSE(is_control_structure(v("x")));
}

TEST_CASE("fresh") {
  CHECK(fresh({"x"}, "x") == "x'");
  CHECK(fresh({}, "g") == "g");
  CHECK(fresh({"g", "g'"}, "g") == "g''");

  std::mt19937_64 rng(7);
  for (int n = 0; n <= 1000; n += 37) {
    std::set<std::string> avoid;
    std::string s = "h";
    for (int i = 0; i < n; ++i) {
      if (rng() % 2) avoid.insert(s);
      s += "'";
    }
    for (int i = 0; static_cast<int>(avoid.size()) < n; ++i)
      avoid.insert("h" + std::to_string(i));
    CHECK(avoid.count(fresh(avoid, "h")) == 0);
  }
}

TEST_CASE("positions") {
  Term t = lam("x", ap(v("x"), mu("a", "a", v("y"))));
  CHECK(format_position({}) == "/");
  CHECK(format_position({0, 1}) == "/0/1");
  CHECK(subterm_at(t, {0, 1, 0}) == v("y"));
  CHECK_FALSE(is_valid_position(t, {1}));
  CHECK(replace_at(t, {0, 0}, v("z")) ==
        lam("x", ap(v("z"), mu("a", "a", v("y")))));
}

TEST_CASE("alpha_eq is an equivalence on a generated corpus") {
  std::mt19937_64 rng(11);
  std::vector<Term> corpus;
  for (int i = 0; i < 60; ++i) corpus.push_back(random_term(rng, 4));
  for (int i = 0; i < 60; ++i)
    corpus.push_back(rename_binders_apart(corpus[i], {}, {}));
  for (const auto& a : corpus) {
    CHECK(alpha_eq(a, a));
    for (const auto& b : corpus) {
      bool ab = alpha_eq(a, b);
      CHECK(ab == alpha_eq(b, a));
      if (ab) {
        CHECK(free_term_vars(a) == free_term_vars(b));
        CHECK(free_names(a) == free_names(b));
        for (const auto& c : corpus)
          if (alpha_eq(b, c)) CHECK(alpha_eq(a, c));
      }
    }
  }
}

TEST_CASE("rename_binders_apart keeps the term and separates binders") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    Term t = random_term(rng, 5);
    Term r = rename_binders_apart(t, vars({"x"}), names({"a"}));
    CHECK(alpha_eq(t, r));
  }
}
