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

#include "lammu/transform.hpp"

#include <functional>
#include <map>
#include <string>
#include <utility>

namespace lammu {

namespace {

using Derivs = std::vector<Derivation>;

Derivation node(LeftEnv g, Term m, const Type& t, RightEnv d, DRule r,
                Derivs ps = {}, std::size_t index = 0) {
  return make_node(
      Judgment{std::move(g), std::move(m), canonicalize(t), std::move(d)}, r,
      std::move(ps), index);
}

Type ctype(const Derivation& d) { return canonicalize(d.conclusion.type); }

DRule mu_rule(const Term& m) {
  return m.bound() == m.named() ? DRule::UnionESelf : DRule::UnionENamed;
}

bool is_mu_rule(DRule r) {
  return r == DRule::UnionENamed || r == DRule::UnionESelf;
}

VarSet keys(const LeftEnv& g) {
  VarSet out;
  for (const auto& [x, t] : g) out.insert(x);
  return out;
}

NameSet keys(const RightEnv& d) {
  NameSet out;
  for (const auto& [a, t] : d) out.insert(a);
  return out;
}

template <class K, class T>
std::map<K, T> without(std::map<K, T> m, const K& k) {
  m.erase(k);
  return m;
}

[[noreturn]] void no_thin(const char* where) {
  throw ConstructionFailure(std::string(where) +
                            ": Thin nodes inside the derivation are not "
                            "supported");
}

// Substitutions on terms whose binders are already apart from everything
// involved, so no renaming is needed.
Term naive_subst(const Term& t, const Var& x, const Term& n) {
  switch (t.kind()) {
    case Term::Kind::Var:
      return t.var() == x ? n : t;
    case Term::Kind::Abs:
      if (t.var() == x) return t;
      return Term::abs(t.var(), naive_subst(t.body(), x, n));
    case Term::Kind::App:
      return Term::app(naive_subst(t.fun(), x, n), naive_subst(t.arg(), x, n));
    case Term::Kind::Mu:
      return Term::mu(t.bound(), t.named(), naive_subst(t.body(), x, n));
  }
  return t;
}

Term naive_ssubst(const Term& t, const Name& a, const Term& n, const Name& g) {
  switch (t.kind()) {
    case Term::Kind::Var:
      return t;
    case Term::Kind::Abs:
      return Term::abs(t.var(), naive_ssubst(t.body(), a, n, g));
    case Term::Kind::App:
      return Term::app(naive_ssubst(t.fun(), a, n, g),
                       naive_ssubst(t.arg(), a, n, g));
    case Term::Kind::Mu: {
      if (t.bound() == a) return t;
      Term b = naive_ssubst(t.body(), a, n, g);
      if (t.named() == a) return Term::mu(t.bound(), g, Term::app(b, n));
      return Term::mu(t.bound(), t.named(), b);
    }
  }
  return t;
}

Term naive_rename(const Term& t, const Name& from, const Name& to) {
  switch (t.kind()) {
    case Term::Kind::Var:
      return t;
    case Term::Kind::Abs:
      return Term::abs(t.var(), naive_rename(t.body(), from, to));
    case Term::Kind::App:
      return Term::app(naive_rename(t.fun(), from, to),
                       naive_rename(t.arg(), from, to));
    case Term::Kind::Mu:
      if (t.bound() == from) return t;
      return Term::mu(t.bound(), t.named() == from ? to : t.named(),
                      naive_rename(t.body(), from, to));
  }
  return t;
}

// --- weaken -------------------------------------------------------------

Derivation push(const Derivation& d, const LeftEnv& g, const RightEnv& dl) {
  const Judgment& c = d.conclusion;
  const Term& m = c.term;
  Type a = ctype(d);
  auto rebuild = [&](Derivs ps) {
    return node(g, m, a, dl, d.rule, std::move(ps), d.index);
  };
  switch (d.rule) {
    case DRule::InterE: {
      auto it = g.find(m.var());
      if (it != g.end()) {
        auto parts = inter_parts(canonicalize(it->second));
        for (std::size_t k = 0; k < parts.size(); ++k)
          if (parts[k] == a) return node(g, m, a, dl, DRule::InterE, {}, k);
      }
      return node(g, m, a, dl, DRule::Weaken, {d});
    }
    case DRule::InterI:
    case DRule::ArrowE: {
      Derivs ps;
      for (const auto& p : d.premises) ps.push_back(push(p, g, dl));
      return rebuild(std::move(ps));
    }
    case DRule::ArrowI:
      return rebuild({push(d.premises[0], extend(g, m.var(), a.left()), dl)});
    case DRule::UnionENamed:
    case DRule::UnionESelf:
      return rebuild({push(d.premises[0], g, extend(dl, m.bound(), a))});
    case DRule::Weaken:
      return node(g, m, a, dl, DRule::Weaken, {d.premises[0]});
    case DRule::Thin:
      return node(g, m, a, dl, DRule::Weaken, {d});
  }
  return d;
}

// --- realign ------------------------------------------------------------

struct Renaming {
  std::map<Var, Var> vars;
  std::map<Name, Name> names;
};

Derivation realign_rec(const Derivation& d, const Term& t, const LeftEnv& g,
                       const RightEnv& dl, const Renaming& ren) {
  const Term& m = d.conclusion.term;
  Type a = ctype(d);
  switch (d.rule) {
    case DRule::InterE: {
      auto it = g.find(t.var());
      if (it != g.end()) {
        auto parts = inter_parts(canonicalize(it->second));
        for (std::size_t k = 0; k < parts.size(); ++k)
          if (parts[k] == a) return node(g, t, a, dl, DRule::InterE, {}, k);
      }
      throw ConstructionFailure("realign: no component '" + a.text() +
                                "' for '" + t.var().text + "'");
    }
    case DRule::InterI: {
      Derivs ps;
      for (const auto& p : d.premises)
        ps.push_back(realign_rec(p, t, g, dl, ren));
      return node(g, t, a, dl, d.rule, std::move(ps));
    }
    case DRule::ArrowI: {
      Renaming r2 = ren;
      r2.vars[m.var()] = t.var();
      return node(g, t, a, dl, d.rule,
                  {realign_rec(d.premises[0], t.body(),
                               extend(g, t.var(), a.left()), dl, r2)});
    }
    case DRule::ArrowE: {
      Derivs ps;
      for (std::size_t i = 0; i < d.premises.size(); ++i)
        ps.push_back(
            realign_rec(d.premises[i], i == 0 ? t.fun() : t.arg(), g, dl, ren));
      return node(g, t, a, dl, d.rule, std::move(ps));
    }
    case DRule::UnionENamed:
    case DRule::UnionESelf: {
      Renaming r2 = ren;
      r2.names[m.bound()] = t.bound();
      return node(g, t, a, dl, d.rule,
                  {realign_rec(d.premises[0], t.body(), g,
                               extend(dl, t.bound(), a), r2)});
    }
    case DRule::Thin:
    case DRule::Weaken: {
      const Judgment& pj = d.premises[0].conclusion;
      LeftEnv pg;
      for (const auto& [x, ty] : pj.gamma) {
        auto it = ren.vars.find(x);
        pg.insert_or_assign(it == ren.vars.end() ? x : it->second, ty);
      }
      RightEnv pd;
      for (const auto& [n, ty] : pj.delta) {
        auto it = ren.names.find(n);
        pd.insert_or_assign(it == ren.names.end() ? n : it->second, ty);
      }
      return node(g, t, a, dl, d.rule,
                  {realign_rec(d.premises[0], t, pg, pd, ren)});
    }
  }
  return d;
}

// --- shared pieces of the lemmas ----------------------------------------

// Builds  fp.term n  by (->E) from fp : T, taking for each arrow of T an
// argument derivation whose type is the arrow's domain.
Derivation apply_to(const Derivation& fp, const Term& n,
                    const std::vector<Type>& arrows, const Derivs& args) {
  const Judgment& c = fp.conclusion;
  auto parts = union_parts(ctype(fp));
  if (parts.empty())
    throw ConstructionFailure(
        "the function part has type bot; (->E) needs at least one arrow");
  Derivs ps{fp};
  std::vector<Type> rights;
  for (const auto& part : parts) {
    if (!part.is_arrow())
      throw ConstructionFailure("component '" + part.text() +
                                "' of the function type is not an arrow");
    const Derivation* found = nullptr;
    for (std::size_t i = 0; i < arrows.size() && !found; ++i)
      if (arrows[i].is_arrow() &&
          canonicalize(arrows[i].left()) == canonicalize(part.left()))
        found = &args[i];
    if (!found)
      throw ConstructionFailure("no argument derivation of type '" +
                                part.left().text() + "'");
    ps.push_back(weaken(*found, c.gamma, c.delta));
    rights.push_back(part.right());
  }
  return node(c.gamma, Term::app(c.term, n), make_union(rights), c.delta,
              DRule::ArrowE, std::move(ps));
}

// Derivation of x : t from x : c in the left environment, where every
// component of t is a component of c.
Derivation project(const LeftEnv& g, const Var& x, const Type& c,
                   const Type& t, const RightEnv& dl) {
  auto cparts = inter_parts(c);
  auto index_of = [&](const Type& p) -> std::size_t {
    for (std::size_t k = 0; k < cparts.size(); ++k)
      if (cparts[k] == p) return k;
    throw ConstructionFailure("'" + p.text() + "' is not a component of '" +
                              c.text() + "'");
  };
  Term m = Term::var(x);
  if (!t.is_inter()) return node(g, m, t, dl, DRule::InterE, {}, index_of(t));
  Derivs ps;
  for (const auto& p : t.parts())
    ps.push_back(node(g, m, p, dl, DRule::InterE, {}, index_of(p)));
  return node(g, m, t, dl, DRule::InterI, std::move(ps));
}

// Derivation of N : c from a pool of derivations of N whose components
// cover those of c.
Derivation assemble(const LeftEnv& g, const Term& n, const Type& c,
                    const RightEnv& dl, const Derivs& pool) {
  auto one = [&](const Type& p) -> Derivation {
    for (const auto& q : pool) {
      auto qp = inter_parts(ctype(q));
      for (std::size_t k = 0; k < qp.size(); ++k)
        if (qp[k] == p) return inter_elim(q, k);
    }
    throw ConstructionFailure("no derivation for component '" + p.text() +
                              "'");
  };
  if (!c.is_inter()) return one(c);
  Derivs ps;
  for (const auto& p : c.parts()) ps.push_back(one(p));
  return node(g, n, c, dl, DRule::InterI, std::move(ps));
}

// Moves a derivation found deep inside another one to the root
// environments; the free identifiers of its subject are not captured.
Derivation relocate(const Derivation& d, const LeftEnv& g,
                    const RightEnv& dl) {
  return weaken(thin(d), g, dl);
}

// --- term substitution --------------------------------------------------

struct TermSubst {
  Var x;
  Type c;
  Term n;
  const Derivation* dn;

  Derivation run(const Derivation& d) const {
    const Judgment& j = d.conclusion;
    LeftEnv g = without(j.gamma, x);
    Term t = naive_subst(j.term, x, n);
    Type a = ctype(d);
    if (d.rule == DRule::InterE && j.term.var() == x) {
      auto it = j.gamma.find(x);
      if (it == j.gamma.end() || !(canonicalize(it->second) == c))
        throw ConstructionFailure("the substituted variable is rebound");
      return weaken(inter_elim(*dn, d.index), g, j.delta);
    }
    if (d.rule == DRule::Thin) no_thin("term substitution");
    Derivs ps;
    for (const auto& p : d.premises) ps.push_back(run(p));
    return node(g, t, a, j.delta, d.rule, std::move(ps), d.index);
  }
};

// --- structural substitution --------------------------------------------

struct StructSubst {
  Name a;
  Name g;
  Type b;
  Term n;
  std::vector<Type> arrows;
  const Derivs* args;

  Derivation run(const Derivation& d) const {
    const Judgment& j = d.conclusion;
    RightEnv dl = extend(without(j.delta, a), g, b);
    Term t = naive_ssubst(j.term, a, n, g);
    Type ty = ctype(d);
    if (d.rule == DRule::Thin) no_thin("structural substitution");
    if (is_mu_rule(d.rule) && j.term.named() == a) {
      if (j.term.bound() == a)
        throw ConstructionFailure("the substituted name is rebound");
      Derivation body = run(d.premises[0]);
      Derivation app = apply_to(body, n, arrows, *args);
      return node(j.gamma, t, ty, dl, DRule::UnionENamed, {app});
    }
    Derivs ps;
    for (const auto& p : d.premises) ps.push_back(run(p));
    return node(j.gamma, t, ty, dl, d.rule, std::move(ps), d.index);
  }
};

// Collects the arrows applied at every [g](P N) of the derivation of
// M[N.g/a] together with the argument derivations.
struct StructCollect {
  Name a;
  Name g;
  LeftEnv root_g;
  RightEnv root_d;
  std::vector<Type> arrows;
  Derivs args;

  void add(const Type& arrow, const Derivation& arg) {
    arrows.push_back(arrow);
    args.push_back(relocate(arg, root_g, root_d));
  }

  void walk(const Term& mt, const Derivation& d) {
    if (d.rule == DRule::Thin) no_thin("decomposition");
    if (d.rule == DRule::InterI || d.rule == DRule::Weaken) {
      for (const auto& p : d.premises) walk(mt, p);
      return;
    }
    switch (mt.kind()) {
      case Term::Kind::Var:
        return;
      case Term::Kind::Abs:
        walk(mt.body(), d.premises.at(0));
        return;
      case Term::Kind::App:
        walk(mt.fun(), d.premises.at(0));
        for (std::size_t i = 1; i < d.premises.size(); ++i)
          walk(mt.arg(), d.premises[i]);
        return;
      case Term::Kind::Mu:
        if (mt.named() == a) {
          const Derivation& app = d.premises.at(0);
          if (app.rule != DRule::ArrowE)
            throw ConstructionFailure("expected (->E) under [" + g.text + "]");
          auto parts = union_parts(ctype(app.premises[0]));
          for (std::size_t i = 0; i < parts.size(); ++i)
            add(parts[i], app.premises[i + 1]);
          walk(mt.body(), app.premises[0]);
        } else {
          walk(mt.body(), d.premises.at(0));
        }
        return;
    }
  }
};

// Rebuilds a derivation of M from one of M[N.g/a] once the type f of a is
// known.
struct StructBuild {
  Name a;
  Name g;
  Type f;

  Derivation run(const Term& mt, const Derivation& d) const {
    const Judgment& j = d.conclusion;
    RightEnv dl = extend(without(j.delta, g), a, f);
    Type ty = ctype(d);
    if (d.rule == DRule::Thin) no_thin("decomposition");
    if (d.rule == DRule::InterI || d.rule == DRule::Weaken) {
      Derivs ps;
      for (const auto& p : d.premises) ps.push_back(run(mt, p));
      return node(j.gamma, mt, ty, dl, d.rule, std::move(ps));
    }
    switch (mt.kind()) {
      case Term::Kind::Var:
        return node(j.gamma, mt, ty, dl, d.rule, {}, d.index);
      case Term::Kind::Abs:
        return node(j.gamma, mt, ty, dl, d.rule,
                    {run(mt.body(), d.premises.at(0))});
      case Term::Kind::App: {
        Derivs ps{run(mt.fun(), d.premises.at(0))};
        for (std::size_t i = 1; i < d.premises.size(); ++i)
          ps.push_back(run(mt.arg(), d.premises[i]));
        return node(j.gamma, mt, ty, dl, d.rule, std::move(ps));
      }
      case Term::Kind::Mu:
        if (mt.named() == a) {
          const Derivation& fun = d.premises.at(0).premises.at(0);
          return node(j.gamma, mt, ty, dl, DRule::UnionENamed,
                      {run(mt.body(), fun)});
        }
        return node(j.gamma, mt, ty, dl, d.rule,
                    {run(mt.body(), d.premises.at(0))});
    }
    return d;
  }
};

StructSubstWitness decompose_struct(
    const Derivation& d, const Term& m0, const Name& a, const Term& n,
    const Name& g, const std::vector<std::pair<Type, Derivation>>& extra) {
  const Judgment& c = d.conclusion;
  auto it = c.delta.find(g);
  if (it == c.delta.end())
    throw PreconditionViolation("'" + g.text +
                                "' is not in the right environment");
  Type v = canonicalize(it->second);
  RightEnv root_d = without(c.delta, g);
  StructCollect col{a, g, c.gamma, root_d, {}, {}};
  for (const auto& [arrow, arg] : extra) col.add(arrow, arg);
  col.walk(m0, d);
  std::vector<Type> all = col.arrows;
  for (const auto& b : union_parts(v)) all.push_back(Type::arrow(Type::top(), b));
  Type f = make_union(all);
  std::vector<Type> rights;
  for (const auto& p : union_parts(f)) rights.push_back(p.right());
  if (!(make_union(rights) == v))
    throw ConstructionFailure("applied codomains do not add up to '" +
                              v.text() + "'");
  StructSubstWitness w{f, StructBuild{a, g, f}.run(m0, d), {}};
  for (const auto& p : union_parts(f)) {
    Type l = canonicalize(p.left());
    if (l.is_top()) {
      w.dn.push_back(node(c.gamma, n, l, root_d, DRule::InterI));
      continue;
    }
    w.dn.push_back(assemble(c.gamma, n, l, root_d, col.args));
  }
  return w;
}

// Renames the free name `from` to `to` in a derivation whose binders avoid
// both; [from] premises are re-checked against the type of `to`.
Derivation rename_deriv(const Derivation& d, const Name& from,
                        const Name& to) {
  const Judgment& j = d.conclusion;
  RightEnv dl = without(j.delta, from);
  Term t = naive_rename(j.term, from, to);
  if (d.rule == DRule::Thin) no_thin("renaming");
  Derivs ps;
  for (const auto& p : d.premises) ps.push_back(rename_deriv(p, from, to));
  DRule r = d.rule;
  if (is_mu_rule(r)) r = mu_rule(t);
  return node(j.gamma, t, ctype(d), dl, r, std::move(ps), d.index);
}

// Inverse of rename_deriv: the [to] nodes that stand for [from] in mt get
// their name back, and `from` is bound to v.
struct RenameBack {
  Name from;
  Name to;
  Type v;

  void collect(const Term& mt, const Derivation& d,
               std::vector<Type>& out) const {
    if (d.rule == DRule::Thin) no_thin("renaming");
    if (d.rule == DRule::InterI || d.rule == DRule::Weaken) {
      for (const auto& p : d.premises) collect(mt, p, out);
      return;
    }
    if (mt.is_mu() && mt.named() == from)
      out.push_back(ctype(d.premises.at(0)));
    for (std::size_t i = 0; i < d.premises.size(); ++i)
      collect(child_for(mt, i), d.premises[i], out);
  }

  static const Term& child_for(const Term& mt, std::size_t premise) {
    if (mt.is_app()) return premise == 0 ? mt.fun() : mt.arg();
    return mt.child(0);
  }

  Derivation run(const Term& mt, const Derivation& d) const {
    const Judgment& j = d.conclusion;
    RightEnv dl = extend(j.delta, from, v);
    Derivs ps;
    if (d.rule == DRule::InterI || d.rule == DRule::Weaken) {
      for (const auto& p : d.premises) ps.push_back(run(mt, p));
    } else {
      for (std::size_t i = 0; i < d.premises.size(); ++i)
        ps.push_back(run(child_for(mt, i), d.premises[i]));
    }
    DRule r = d.rule;
    if (is_mu_rule(r)) r = mu_rule(mt);
    return node(j.gamma, mt, ctype(d), dl, r, std::move(ps), d.index);
  }
};

// --- positions ----------------------------------------------------------

using RootFn = std::function<Derivation(const Derivation&, const Term&)>;

// Applies f at `pos`, giving every node on the way the matching subterm of
// `whole`.
Derivation at_position(const Derivation& d, const Term& whole,
                       const Position& pos, std::size_t k, const RootFn& f) {
  Position prefix(pos.begin(), pos.begin() + static_cast<long>(k));
  const Term& t = subterm_at(whole, prefix);
  if (k == pos.size()) return f(d, t);
  const Judgment& j = d.conclusion;
  Type a = ctype(d);
  Derivs ps;
  switch (d.rule) {
    case DRule::InterI:
    case DRule::Weaken:
      for (const auto& p : d.premises)
        ps.push_back(at_position(p, whole, pos, k, f));
      break;
    case DRule::Thin:
      no_thin("rewriting");
    case DRule::InterE:
      throw PreconditionViolation("position " + format_position(pos) +
                                  " runs past a variable");
    case DRule::ArrowE:
      for (std::size_t i = 0; i < d.premises.size(); ++i) {
        bool hit = (pos[k] == 0) == (i == 0);
        ps.push_back(hit ? at_position(d.premises[i], whole, pos, k + 1, f)
                         : d.premises[i]);
      }
      break;
    default:
      ps.push_back(at_position(d.premises.at(0), whole, pos, k + 1, f));
  }
  return node(j.gamma, t, a, j.delta, d.rule, std::move(ps), d.index);
}

Term barendregt(const Derivation& d, const VarSet& vars = {},
                const NameSet& names = {}) {
  VarSet av = keys(d.conclusion.gamma);
  av.insert(vars.begin(), vars.end());
  NameSet an = keys(d.conclusion.delta);
  an.insert(names.begin(), names.end());
  return rename_binders_apart(d.conclusion.term, av, an);
}

Derivation reduce_root(const Derivation& d, const Term& contractum,
                       Rule rule) {
  const Judgment& j = d.conclusion;
  Type a = ctype(d);
  if (d.rule == DRule::Thin) no_thin("subject reduction");
  if (d.rule == DRule::InterI || d.rule == DRule::Weaken) {
    Derivs ps;
    for (const auto& p : d.premises)
      ps.push_back(reduce_root(p, contractum, rule));
    return node(j.gamma, contractum, a, j.delta, d.rule, std::move(ps));
  }
  Term r0 = barendregt(d);
  Derivation d0 = realign(d, r0);
  const LeftEnv& g = j.gamma;
  const RightEnv& dl = j.delta;
  Derivation out = d0;
  switch (rule) {
    case Rule::Beta: {
      const Derivation& fun = d0.premises.at(0);
      if (fun.rule != DRule::ArrowI || d0.premises.size() != 2)
        throw ConstructionFailure("beta redex is not typed by (->I)");
      out = term_subst_lemma(fun.premises[0], r0.fun().var(), d0.premises[1]);
      break;
    }
    case Rule::Mu: {
      const Derivation& fun = d0.premises.at(0);
      if (!is_mu_rule(fun.rule))
        throw ConstructionFailure("mu redex is not typed by (UnionE)");
      const Term& mu = r0.fun();
      const Term& n = r0.arg();
      Derivs args(d0.premises.begin() + 1, d0.premises.end());
      auto arrows = union_parts(ctype(fun));
      NameSet avoid = all_names(r0);
      for (const auto& [k, t] : dl) avoid.insert(k);
      Name gn = fresh_name(avoid, mu.bound());
      Derivation s =
          struct_subst_lemma(fun.premises[0], mu.bound(), n, args, gn);
      if (mu.bound() != mu.named()) {
        out = node(g, Term::mu(gn, mu.named(), s.conclusion.term), a, dl,
                   DRule::UnionENamed, {s});
      } else {
        Derivation app = apply_to(s, n, arrows, args);
        out = node(g, Term::mu(gn, gn, app.conclusion.term), a, dl,
                   DRule::UnionESelf, {app});
      }
      break;
    }
    case Rule::Renaming: {
      const Derivation& inner = d0.premises.at(0);
      if (!is_mu_rule(inner.rule))
        throw ConstructionFailure("renaming redex is not typed by (UnionE)");
      const Term& in = r0.body();
      Name to = r0.named();
      Derivation body = rename_deriv(inner.premises.at(0), in.bound(), to);
      Name named = in.named() == in.bound() ? to : in.named();
      Term t = Term::mu(r0.bound(), named, body.conclusion.term);
      out = node(g, t, a, dl, mu_rule(t), {body});
      break;
    }
    default:
      throw PreconditionViolation(std::string("no proof transformation for ") +
                                  rule_name(rule));
  }
  return realign(out, contractum);
}

Derivation expand_root(const Derivation& d, const Term& redex, Rule rule) {
  const Judgment& j = d.conclusion;
  Type a = ctype(d);
  if (d.rule == DRule::Thin) no_thin("subject expansion");
  if (d.rule == DRule::InterI || d.rule == DRule::Weaken) {
    Derivs ps;
    for (const auto& p : d.premises) ps.push_back(expand_root(p, redex, rule));
    return node(j.gamma, redex, a, j.delta, d.rule, std::move(ps));
  }
  const LeftEnv& g = j.gamma;
  const RightEnv& dl = j.delta;
  VarSet av = keys(g);
  NameSet an = keys(dl);
  Term r0 = rename_binders_apart(redex, av, an);
  Term n0 = step(r0, {}, rule);
  if (!alpha_eq(n0, j.term))
    throw PreconditionViolation("the derivation is not about the contractum");
  Derivation d0 = realign(d, n0);
  Derivation out = d0;
  switch (rule) {
    case Rule::Beta: {
      const Term& lam = r0.fun();
      TermSubstWitness w =
          term_subst_decompose(d0, lam.body(), lam.var(), r0.arg());
      Derivation fun = node(g, lam, Type::arrow(w.c, a), dl, DRule::ArrowI,
                            {w.dm});
      out = node(g, r0, a, dl, DRule::ArrowE, {fun, w.dn});
      break;
    }
    case Rule::Mu: {
      const Term& mu = r0.fun();
      const Term& n = r0.arg();
      Name gn = n0.bound();
      const Derivation& body = d0.premises.at(0);
      StructSubstWitness w{a, d0, {}};
      if (mu.bound() != mu.named()) {
        w = decompose_struct(body, mu.body(), mu.bound(), n, gn, {});
      } else {
        if (body.rule != DRule::ArrowE)
          throw ConstructionFailure("expected (->E) under the self-named mu");
        std::vector<std::pair<Type, Derivation>> extra;
        auto parts = union_parts(ctype(body.premises[0]));
        for (std::size_t i = 0; i < parts.size(); ++i)
          extra.emplace_back(parts[i], body.premises[i + 1]);
        w = decompose_struct(body.premises[0], mu.body(), mu.bound(), n, gn,
                             extra);
      }
      Derivation fun = node(g, mu, w.arrows, dl, mu_rule(mu), {w.dm});
      Derivs ps{fun};
      for (auto& x : w.dn) ps.push_back(std::move(x));
      out = node(g, r0, a, dl, DRule::ArrowE, std::move(ps));
      break;
    }
    case Rule::Renaming: {
      const Term& in = r0.body();
      const Derivation& p = d0.premises.at(0);
      RenameBack back{in.bound(), r0.named(), Type::bottom()};
      std::vector<Type> xs;
      back.collect(in.body(), p, xs);
      if (in.named() == in.bound()) xs.push_back(ctype(p));
      back.v = make_union(xs);
      Derivation mp = back.run(in.body(), p);
      RightEnv d1 = extend(dl, r0.bound(), a);
      Derivation inner = node(g, in, back.v, d1, mu_rule(in), {mp});
      out = node(g, r0, a, dl, mu_rule(r0), {inner});
      break;
    }
    default:
      throw PreconditionViolation(std::string("no proof transformation for ") +
                                  rule_name(rule));
  }
  return realign(out, redex);
}

}  // namespace

Derivation inter_elim(const Derivation& d, std::size_t i) {
  Type a = ctype(d);
  auto parts = inter_parts(a);
  if (i >= parts.size())
    throw IndexOutOfRange("component " + std::to_string(i) + " of '" +
                          a.text() + "' does not exist");
  if (!a.is_inter()) return d;
  switch (d.rule) {
    case DRule::InterI:
      for (const auto& p : d.premises)
        if (ctype(p) == parts[i]) return p;
      break;
    case DRule::Thin:
    case DRule::Weaken: {
      Derivation out = d;
      out.conclusion.type = parts[i];
      out.premises = {inter_elim(d.premises[0], i)};
      return out;
    }
    default:
      break;
  }
  throw ConstructionFailure("no premise for component '" + parts[i].text() +
                            "'");
}

namespace {

Derivation thin_rec(const Derivation& d, const VarSet& kv,
                    const NameSet& kn) {
  Derivation out = d;
  out.conclusion.gamma = restrict_to(d.conclusion.gamma, kv);
  out.conclusion.delta = restrict_to(d.conclusion.delta, kn);
  out.premises.clear();
  const Term& m = d.conclusion.term;
  for (const auto& p : d.premises) {
    VarSet v = kv;
    NameSet n = kn;
    if (d.rule == DRule::ArrowI) v.insert(m.var());
    if (is_mu_rule(d.rule)) n.insert(m.bound());
    out.premises.push_back(thin_rec(p, v, n));
  }
  return out;
}

}  // namespace

Derivation thin(const Derivation& d) {
  const Term& m = d.conclusion.term;
  return thin_rec(d, free_term_vars(m), free_names(m));
}

Derivation weaken(const Derivation& d, const LeftEnv& gamma,
                  const RightEnv& delta) {
  const Judgment& c = d.conclusion;
  if (!env_leq_left(canonicalize(gamma), canonicalize(c.gamma)))
    throw PreconditionViolation(
        "the new left environment is not below the old one");
  if (!env_leq_right(canonicalize(c.delta), canonicalize(delta)))
    throw PreconditionViolation(
        "the old right environment is not below the new one");
  return push(d, gamma, delta);
}

Derivation realign(const Derivation& d, const Term& target) {
  const Judgment& c = d.conclusion;
  if (c.term == target) return d;
  if (!alpha_eq(c.term, target))
    throw PreconditionViolation("subjects are not alpha-equivalent");
  return realign_rec(d, target, c.gamma, c.delta, {});
}

Derivation term_subst_lemma(const Derivation& dm, const Var& x,
                            const Derivation& dn) {
  const Judgment& c = dm.conclusion;
  auto it = c.gamma.find(x);
  if (it == c.gamma.end())
    throw PreconditionViolation("'" + x.text +
                                "' is not in the left environment");
  Type cx = canonicalize(it->second);
  if (!(ctype(dn) == cx))
    throw PreconditionViolation("the substituted term has type '" +
                                ctype(dn).text() + "', expected '" +
                                cx.text() + "'");
  const Term& n = dn.conclusion.term;
  VarSet av = free_term_vars(n);
  av.insert(x);
  for (const auto& [k, t] : dn.conclusion.gamma) av.insert(k);
  NameSet an = free_names(n);
  for (const auto& [k, t] : dn.conclusion.delta) an.insert(k);
  Term m0 = barendregt(dm, av, an);
  TermSubst ts{x, cx, n, &dn};
  return realign(ts.run(realign(dm, m0)), subst_term(c.term, x, n));
}

TermSubstWitness term_subst_decompose(const Derivation& d, const Term& m,
                                      const Var& x, const Term& n) {
  const Judgment& c = d.conclusion;
  if (free_term_vars(n).count(x))
    throw PreconditionViolation("'" + x.text + "' is free in the argument");
  VarSet av = keys(c.gamma);
  av.insert(x);
  for (const auto& v : free_term_vars(n)) av.insert(v);
  NameSet an = keys(c.delta);
  for (const auto& v : free_names(n)) an.insert(v);
  Term m0 = rename_binders_apart(m, av, an);
  Term target = naive_subst(m0, x, n);
  if (!alpha_eq(target, c.term))
    throw PreconditionViolation("the derivation is not about M[N/x]");
  Derivation d0 = realign(d, target);

  Derivs occ;
  std::function<void(const Term&, const Derivation&)> collect =
      [&](const Term& mt, const Derivation& dd) {
        if (mt.is_var() && mt.var() == x) {
          occ.push_back(relocate(dd, c.gamma, c.delta));
          return;
        }
        if (dd.rule == DRule::Thin) no_thin("decomposition");
        if (dd.rule == DRule::InterI || dd.rule == DRule::Weaken) {
          for (const auto& p : dd.premises) collect(mt, p);
          return;
        }
        for (std::size_t i = 0; i < dd.premises.size(); ++i)
          collect(RenameBack::child_for(mt, i), dd.premises[i]);
      };
  collect(m0, d0);
  std::vector<Type> types;
  for (const auto& o : occ)
    for (const auto& p : inter_parts(ctype(o))) types.push_back(p);
  Type cx = make_inter(types);

  std::function<Derivation(const Term&, const Derivation&)> build =
      [&](const Term& mt, const Derivation& dd) -> Derivation {
    const Judgment& j = dd.conclusion;
    LeftEnv g = extend(j.gamma, x, cx);
    if (mt.is_var() && mt.var() == x)
      return project(g, x, cx, ctype(dd), j.delta);
    Derivs ps;
    if (dd.rule == DRule::InterI || dd.rule == DRule::Weaken) {
      for (const auto& p : dd.premises) ps.push_back(build(mt, p));
    } else {
      for (std::size_t i = 0; i < dd.premises.size(); ++i)
        ps.push_back(build(RenameBack::child_for(mt, i), dd.premises[i]));
    }
    return node(g, mt, ctype(dd), j.delta, dd.rule, std::move(ps), dd.index);
  };
  Derivation dm = realign(build(m0, d0), m);
  Derivation dn = cx.is_top() ? node(c.gamma, n, cx, c.delta, DRule::InterI)
                              : assemble(c.gamma, n, cx, c.delta, occ);
  return TermSubstWitness{cx, dm, dn};
}

Derivation struct_subst_lemma(const Derivation& dm, const Name& a,
                              const Term& n,
                              const std::vector<Derivation>& dn,
                              const Name& g) {
  const Judgment& c = dm.conclusion;
  auto it = c.delta.find(a);
  if (it == c.delta.end())
    throw PreconditionViolation("'" + a.text +
                                "' is not in the right environment");
  if (g == a || c.delta.count(g) || all_names(c.term).count(g) ||
      free_names(n).count(g))
    throw PreconditionViolation("'" + g.text + "' is not fresh");
  auto arrows = union_parts(canonicalize(it->second));
  if (arrows.size() != dn.size())
    throw PreconditionViolation("one argument derivation per arrow is needed");
  std::vector<Type> rights;
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    if (!arrows[i].is_arrow())
      throw PreconditionViolation("'" + arrows[i].text() +
                                  "' is not an arrow");
    if (!(ctype(dn[i]) == canonicalize(arrows[i].left())))
      throw PreconditionViolation("argument derivation " + std::to_string(i) +
                                  " has the wrong type");
    rights.push_back(arrows[i].right());
  }
  VarSet av = free_term_vars(n);
  NameSet an = free_names(n);
  an.insert(a);
  an.insert(g);
  for (const auto& x : dn) {
    for (const auto& [k, t] : x.conclusion.gamma) av.insert(k);
    for (const auto& [k, t] : x.conclusion.delta) an.insert(k);
  }
  Term m0 = barendregt(dm, av, an);
  StructSubst ss{a, g, make_union(rights), n, arrows, &dn};
  return realign(ss.run(realign(dm, m0)),
                 subst_structural(c.term, a, n, g));
}

StructSubstWitness struct_subst_decompose(const Derivation& d, const Term& m,
                                          const Name& a, const Term& n,
                                          const Name& g) {
  const Judgment& c = d.conclusion;
  VarSet av = keys(c.gamma);
  for (const auto& v : free_term_vars(n)) av.insert(v);
  NameSet an = keys(c.delta);
  for (const auto& v : free_names(n)) an.insert(v);
  an.insert(a);
  an.insert(g);
  Term m0 = rename_binders_apart(m, av, an);
  Term target = naive_ssubst(m0, a, n, g);
  if (!alpha_eq(target, c.term))
    throw PreconditionViolation("the derivation is not about M[N.g/a]");
  StructSubstWitness w =
      decompose_struct(realign(d, target), m0, a, n, g, {});
  w.dm = realign(w.dm, m);
  return w;
}

Derivation subject_reduction(const Derivation& d, const Position& pos,
                             Rule rule) {
  const Term& m = d.conclusion.term;
  Term reduct = step(m, pos, rule);
  return at_position(d, reduct, pos, 0,
                     [rule](const Derivation& sub, const Term& contractum) {
                       return reduce_root(sub, contractum, rule);
                     });
}

Derivation subject_expansion(const Derivation& d, const Term& m,
                             const Position& pos, Rule rule) {
  Term reduct = step(m, pos, rule);
  if (!alpha_eq(reduct, d.conclusion.term))
    throw PreconditionViolation("the derivation is not about the reduct");
  Derivation d0 = realign(d, reduct);
  return at_position(d0, m, pos, 0,
                     [rule](const Derivation& sub, const Term& redex) {
                       return expand_root(sub, redex, rule);
                     });
}

}  // namespace lammu
