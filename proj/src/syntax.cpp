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

#include "lammu/syntax.hpp"

#include <cassert>
#include <functional>
#include <optional>
#include <stdexcept>
#include <utility>

namespace lammu {

struct Term::Node {
  Kind kind;
  Var var;
  Name bound;
  Name named;
  std::optional<Term> a;
  std::optional<Term> b;
  std::size_t size;
};

Term Term::var(Var x) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Var;
  n->var = std::move(x);
  n->size = 1;
  return Term(std::move(n));
}

Term Term::abs(Var x, Term body) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Abs;
  n->var = std::move(x);
  n->size = 1 + body.size();
  n->a = std::move(body);
  return Term(std::move(n));
}

Term Term::app(Term fun, Term arg) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::App;
  n->size = 1 + fun.size() + arg.size();
  n->a = std::move(fun);
  n->b = std::move(arg);
  return Term(std::move(n));
}

Term Term::mu(Name bound, Name named, Term body) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Mu;
  n->bound = std::move(bound);
  n->named = std::move(named);
  n->size = 1 + body.size();
  n->a = std::move(body);
  return Term(std::move(n));
}

Term::Kind Term::kind() const { return node_->kind; }

const Var& Term::var() const {
  assert(is_var() || is_abs());
  return node_->var;
}

const Term& Term::body() const {
  assert(is_abs() || is_mu());
  return *node_->a;
}
const Term& Term::fun() const {
  assert(is_app());
  return *node_->a;
}
const Term& Term::arg() const {
  assert(is_app());
  return *node_->b;
}
const Name& Term::bound() const {
  assert(is_mu());
  return node_->bound;
}
const Name& Term::named() const {
  assert(is_mu());
  return node_->named;
}

std::size_t Term::num_children() const {
  switch (kind()) {
    case Kind::Var:
      return 0;
    case Kind::App:
      return 2;
    default:
      return 1;
  }
}

const Term& Term::child(std::size_t i) const {
  if (i >= num_children()) throw std::out_of_range("Term::child");
  if (is_app()) return i == 0 ? fun() : arg();
  return body();
}

Term Term::with_child(std::size_t i, Term c) const {
  switch (kind()) {
    case Kind::Abs:
      return abs(var(), std::move(c));
    case Kind::Mu:
      return mu(bound(), named(), std::move(c));
    case Kind::App:
      return i == 0 ? app(std::move(c), arg()) : app(fun(), std::move(c));
    case Kind::Var:
      break;
  }
  throw std::out_of_range("Term::with_child");
}

std::size_t Term::size() const { return node_->size; }

bool Term::operator==(const Term& o) const {
  if (node_ == o.node_) return true;
  if (kind() != o.kind() || size() != o.size()) return false;
  switch (kind()) {
    case Kind::Var:
      return var() == o.var();
    case Kind::Abs:
      return var() == o.var() && body() == o.body();
    case Kind::App:
      return fun() == o.fun() && arg() == o.arg();
    case Kind::Mu:
      return bound() == o.bound() && named() == o.named() && body() == o.body();
  }
  return false;
}

std::string format_position(const Position& p) {
  if (p.empty()) return "/";
  std::string out;
  for (auto i : p) out += "/" + std::to_string(i);
  return out;
}

bool is_valid_position(const Term& t, const Position& p) {
  const Term* cur = &t;
  for (auto i : p) {
    if (i >= cur->num_children()) return false;
    cur = &cur->child(i);
  }
  return true;
}

const Term& subterm_at(const Term& t, const Position& p) {
  const Term* cur = &t;
  for (auto i : p) cur = &cur->child(i);
  return *cur;
}

namespace {

Term replace_from(const Term& t, const Position& p, std::size_t k,
                  Term replacement) {
  if (k == p.size()) return replacement;
  return t.with_child(p[k],
                      replace_from(t.child(p[k]), p, k + 1, std::move(replacement)));
}

void collect_free(const Term& t, VarSet& bound_vars, NameSet& bound_names,
                  VarSet* vars, NameSet* names) {
  switch (t.kind()) {
    case Term::Kind::Var:
      if (vars && !bound_vars.count(t.var())) vars->insert(t.var());
      return;
    case Term::Kind::Abs: {
      bool added = bound_vars.insert(t.var()).second;
      collect_free(t.body(), bound_vars, bound_names, vars, names);
      if (added) bound_vars.erase(t.var());
      return;
    }
    case Term::Kind::App:
      collect_free(t.fun(), bound_vars, bound_names, vars, names);
      collect_free(t.arg(), bound_vars, bound_names, vars, names);
      return;
    case Term::Kind::Mu: {
      bool added = bound_names.insert(t.bound()).second;
      if (names && !bound_names.count(t.named())) names->insert(t.named());
      collect_free(t.body(), bound_vars, bound_names, vars, names);
      if (added) bound_names.erase(t.bound());
      return;
    }
  }
}

void collect_all(const Term& t, VarSet* vars, NameSet* names) {
  switch (t.kind()) {
    case Term::Kind::Var:
      if (vars) vars->insert(t.var());
      return;
    case Term::Kind::Abs:
      if (vars) vars->insert(t.var());
      collect_all(t.body(), vars, names);
      return;
    case Term::Kind::App:
      collect_all(t.fun(), vars, names);
      collect_all(t.arg(), vars, names);
      return;
    case Term::Kind::Mu:
      if (names) {
        names->insert(t.bound());
        names->insert(t.named());
      }
      collect_all(t.body(), vars, names);
      return;
  }
}

// Scoped binder correspondence for alpha_eq: innermost binding wins.
template <class Id>
struct Scope {
  std::vector<std::pair<Id, Id>> stack;

  // 1: both bound to each other, 0: both free and equal, -1: mismatch.
  bool match(const Id& a, const Id& b) const {
    for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
      bool la = it->first == a;
      bool rb = it->second == b;
      if (la || rb) return la && rb;
    }
    return a == b;
  }
};

bool alpha_rec(const Term& a, const Term& b, Scope<Var>& vs, Scope<Name>& ns) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Term::Kind::Var:
      return vs.match(a.var(), b.var());
    case Term::Kind::Abs: {
      vs.stack.emplace_back(a.var(), b.var());
      bool r = alpha_rec(a.body(), b.body(), vs, ns);
      vs.stack.pop_back();
      return r;
    }
    case Term::Kind::App:
      return alpha_rec(a.fun(), b.fun(), vs, ns) &&
             alpha_rec(a.arg(), b.arg(), vs, ns);
    case Term::Kind::Mu: {
      ns.stack.emplace_back(a.bound(), b.bound());
      bool r = ns.match(a.named(), b.named()) &&
               alpha_rec(a.body(), b.body(), vs, ns);
      ns.stack.pop_back();
      return r;
    }
  }
  return false;
}

}  // namespace

Term replace_at(const Term& t, const Position& p, Term replacement) {
  if (!is_valid_position(t, p)) throw std::out_of_range("replace_at: bad position");
  return replace_from(t, p, 0, std::move(replacement));
}

VarSet free_term_vars(const Term& t) {
  VarSet bv, out;
  NameSet bn;
  collect_free(t, bv, bn, &out, nullptr);
  return out;
}

NameSet free_names(const Term& t) {
  VarSet bv;
  NameSet bn, out;
  collect_free(t, bv, bn, nullptr, &out);
  return out;
}

VarSet all_term_vars(const Term& t) {
  VarSet out;
  collect_all(t, &out, nullptr);
  return out;
}

NameSet all_names(const Term& t) {
  NameSet out;
  collect_all(t, nullptr, &out);
  return out;
}

bool alpha_eq(const Term& a, const Term& b) {
  if (a.same_node(b)) return true;
  Scope<Var> vs;
  Scope<Name> ns;
  return alpha_rec(a, b, vs, ns);
}

bool is_control_structure(const Term& t) {
  const Term* cur = &t;
  while (cur->is_app()) cur = &cur->fun();
  return cur->is_mu();
}

std::string fresh(const std::set<std::string>& avoid, const std::string& hint) {
  std::string candidate = hint;
  while (avoid.count(candidate)) candidate += '\'';
  return candidate;
}

Var fresh_var(const VarSet& avoid, const Var& hint) {
  std::string candidate = hint.text;
  while (avoid.count(Var{candidate})) candidate += '\'';
  return Var{candidate};
}

Name fresh_name(const NameSet& avoid, const Name& hint) {
  std::string candidate = hint.text;
  while (avoid.count(Name{candidate})) candidate += '\'';
  return Name{candidate};
}

namespace {

struct Renamer {
  VarSet used_vars;
  NameSet used_names;

  Term go(const Term& t, std::vector<std::pair<Var, Var>>& vmap,
          std::vector<std::pair<Name, Name>>& nmap) {
    auto lookup_var = [&](const Var& x) {
      for (auto it = vmap.rbegin(); it != vmap.rend(); ++it)
        if (it->first == x) return it->second;
      return x;
    };
    auto lookup_name = [&](const Name& a) {
      for (auto it = nmap.rbegin(); it != nmap.rend(); ++it)
        if (it->first == a) return it->second;
      return a;
    };
    switch (t.kind()) {
      case Term::Kind::Var:
        return Term::var(lookup_var(t.var()));
      case Term::Kind::Abs: {
        Var y = fresh_var(used_vars, t.var());
        used_vars.insert(y);
        vmap.emplace_back(t.var(), y);
        Term body = go(t.body(), vmap, nmap);
        vmap.pop_back();
        return Term::abs(y, std::move(body));
      }
      case Term::Kind::App: {
        Term f = go(t.fun(), vmap, nmap);
        return Term::app(std::move(f), go(t.arg(), vmap, nmap));
      }
      case Term::Kind::Mu: {
        Name c = fresh_name(used_names, t.bound());
        used_names.insert(c);
        nmap.emplace_back(t.bound(), c);
        Name named = lookup_name(t.named());
        Term body = go(t.body(), vmap, nmap);
        nmap.pop_back();
        return Term::mu(c, named, std::move(body));
      }
    }
    return t;
  }
};

}  // namespace

Term rename_binders_apart(const Term& t, const VarSet& avoid_vars,
                          const NameSet& avoid_names) {
  Renamer r;
  r.used_vars = avoid_vars;
  r.used_names = avoid_names;
  for (const auto& v : free_term_vars(t)) r.used_vars.insert(v);
  for (const auto& n : free_names(t)) r.used_names.insert(n);
  std::vector<std::pair<Var, Var>> vmap;
  std::vector<std::pair<Name, Name>> nmap;
  return r.go(t, vmap, nmap);
}

}  // namespace lammu
