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

#include "gen.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace lammu::detail {

namespace {

const char* const kAtoms[] = {"A", "B", "C", "D"};
const char* const kFreeVars[] = {"x", "y", "z", "w", "f", "g", "h", "k"};
const char* const kFreeNames[] = {"b", "c", "d", "e", "g", "h"};
const char* const kBinderVars[] = {"u", "v", "s", "t"};
const char* const kBinderNames[] = {"a", "k", "l"};

std::set<std::string> texts(const VarSet& s) {
  std::set<std::string> out;
  for (const auto& v : s) out.insert(v.text);
  return out;
}

std::set<std::string> texts(const NameSet& s) {
  std::set<std::string> out;
  for (const auto& v : s) out.insert(v.text);
  return out;
}

}  // namespace

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finaliser over the pair.
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Derivation project(const LeftEnv& g, const Var& x, const Type& c,
                   const Type& t, const RightEnv& d) {
  auto cparts = inter_parts(c);
  auto index_of = [&](const Type& p) -> std::size_t {
    for (std::size_t k = 0; k < cparts.size(); ++k)
      if (cparts[k] == p) return k;
    throw std::logic_error("projection of a missing component");
  };
  Term m = Term::var(x);
  if (!t.is_inter())
    return make_node({g, m, t, d}, DRule::InterE, {}, index_of(t));
  std::vector<Derivation> ps;
  for (const auto& p : t.parts())
    ps.push_back(make_node({g, m, p, d}, DRule::InterE, {}, index_of(p)));
  return make_node({g, m, t, d}, DRule::InterI, std::move(ps));
}

Gen::Gen(const GenConfig& cfg, std::uint64_t seed) : cfg_(cfg), rng_(seed) {}

bool Gen::chance(double p) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng_) < p;
}

std::size_t Gen::below(std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_);
}

Type Gen::rand_strict(int depth) {
  if (depth <= 0 || chance(0.45)) {
    std::vector<Type> strict_hints;
    for (const auto& h : hints)
      if (h.is_strict()) strict_hints.push_back(h);
    if (!strict_hints.empty() && chance(0.3))
      return strict_hints[below(strict_hints.size())];
    return Type::var(kAtoms[below(4)]);
  }
  if (below(10) < 6)
    return canonicalize(
        Type::arrow(rand_type(depth - 1), rand_strict(depth - 1)));
  return make_union({rand_strict(depth - 1), rand_strict(depth - 1)});
}

Type Gen::rand_type(int depth) {
  if (!hints.empty() && chance(0.25)) return hints[below(hints.size())];
  std::size_t r = below(10);
  if (r < 7) return rand_strict(depth);
  if (r < 9) return make_inter({rand_strict(depth), rand_strict(depth)});
  return Type::top();
}

Type Gen::sub_union(const Type& t) {
  auto parts = union_parts(t);
  if (parts.size() <= 1 || chance(0.5)) return t;
  std::vector<Type> keep;
  for (const auto& p : parts)
    if (chance(0.5)) keep.push_back(p);
  if (keep.empty()) keep.push_back(parts[below(parts.size())]);
  return make_union(keep);
}

Var Gen::new_world_var(const Type& t) {
  std::set<std::string> avoid = texts(reserved_vars_);
  for (const auto& [x, ty] : world_g) avoid.insert(x.text);
  std::size_t pool = std::min<std::size_t>(cfg_.var_pool, 8);
  Var x;
  std::size_t start = below(pool);
  for (std::size_t i = 0; i < pool && x.text.empty(); ++i) {
    const char* c = kFreeVars[(start + i) % pool];
    if (!avoid.count(c)) x = Var{c};
  }
  if (x.text.empty()) x = Var{fresh(avoid, kFreeVars[start])};
  world_g.emplace(x, canonicalize(t));
  reserved_vars_.insert(x);
  return x;
}

Name Gen::new_world_name(const Type& t) {
  std::set<std::string> avoid = texts(reserved_names_);
  for (const auto& [a, ty] : world_d) avoid.insert(a.text);
  std::size_t pool = std::min<std::size_t>(cfg_.name_pool, 6);
  Name a;
  std::size_t start = below(pool);
  for (std::size_t i = 0; i < pool && a.text.empty(); ++i) {
    const char* c = kFreeNames[(start + i) % pool];
    if (!avoid.count(c)) a = Name{c};
  }
  if (a.text.empty()) a = Name{fresh(avoid, kFreeNames[start])};
  world_d.emplace(a, canonicalize(t));
  reserved_names_.insert(a);
  return a;
}

Var Gen::binder_var(const Ctx& ctx) {
  std::set<std::string> avoid;
  for (const auto& [x, t] : ctx.g) avoid.insert(x.text);
  return Var{fresh(avoid, kBinderVars[below(4)])};
}

Name Gen::binder_name(const Ctx& ctx) {
  std::set<std::string> avoid;
  for (const auto& [a, t] : ctx.d) avoid.insert(a.text);
  return Name{fresh(avoid, kBinderNames[below(3)])};
}

Derivation Gen::leaf(const Ctx& ctx, const Type& a) {
  auto covers = [&](const Type& have) {
    auto hp = inter_parts(have);
    for (const auto& p : inter_parts(a))
      if (std::find(hp.begin(), hp.end(), p) == hp.end()) return false;
    return true;
  };
  auto type_of = [&](const Var& x) -> Type {
    auto it = ctx.g.find(x);
    return it != ctx.g.end() ? it->second : world_g.at(x);
  };
  if (prefer_var && !ctx.g.count(*prefer_var) &&
      covers(world_g.at(*prefer_var)) && chance(0.8))
    return project(ctx.g, *prefer_var, world_g.at(*prefer_var), a, ctx.d);
  std::vector<Var> cands;
  for (const auto& [x, t] : ctx.g)
    if (covers(t)) cands.push_back(x);
  for (const auto& [x, t] : world_g)
    if (!ctx.g.count(x) && covers(t)) cands.push_back(x);
  if (!cands.empty() && chance(0.7)) {
    Var x = cands[below(cands.size())];
    return project(ctx.g, x, type_of(x), a, ctx.d);
  }
  Type t = a;
  if (a.is_strict() && chance(0.3)) t = make_inter({a, rand_strict(1)});
  Var x = new_world_var(t);
  return project(ctx.g, x, world_g.at(x), a, ctx.d);
}

Derivation Gen::any(const Ctx& ctx, const Type& c) {
  if (c.is_top())
    return make_node({ctx.g, random_term(ctx, 1 + below(3)), c, ctx.d},
                     DRule::InterI, {});
  if (c.is_strict()) return strict(ctx, c);
  return leaf(ctx, c);
}

Term Gen::random_term(const Ctx& ctx, std::size_t size) {
  if (size <= 1) {
    std::vector<Var> vs;
    for (const auto& [x, t] : ctx.g) vs.push_back(x);
    for (const auto& [x, t] : world_g) vs.push_back(x);
    if (vs.empty() || chance(0.2)) {
      Var x{kFreeVars[below(std::min<std::size_t>(cfg_.var_pool, 8))]};
      if (!ctx.g.count(x) && !world_g.count(x)) reserved_vars_.insert(x);
      return Term::var(x);
    }
    return Term::var(vs[below(vs.size())]);
  }
  std::size_t r = below(10);
  if (r < 4) {
    Var x = binder_var(ctx);
    Ctx c2 = ctx;
    c2.g = extend(ctx.g, x, Type::top());
    return Term::abs(x, random_term(c2, size - 1));
  }
  if (r < 8 || cfg_.mu_frequency <= 0.0) {
    std::size_t left = 1 + below(size - 1);
    return Term::app(random_term(ctx, left),
                     random_term(ctx, std::max<std::size_t>(1, size - left)));
  }
  Name a = binder_name(ctx);
  Ctx c2 = ctx;
  c2.d = extend(ctx.d, a, Type::top());
  std::vector<Name> ns{a};
  for (const auto& [n, t] : ctx.d) ns.push_back(n);
  for (const auto& [n, t] : world_d) ns.push_back(n);
  Name b = ns[below(ns.size())];
  return Term::mu(a, b, random_term(c2, size - 1));
}

Derivation Gen::arrow_e(const Ctx& ctx, const Type& a) {
  auto parts = union_parts(a);
  std::vector<Type> groups;
  if (parts.size() >= 2 && chance(0.3)) {
    std::vector<Type> g0, g1;
    for (const auto& p : parts) (chance(0.5) ? g0 : g1).push_back(p);
    if (g0.empty()) g0.push_back(g1.back()), g1.pop_back();
    if (g1.empty()) g1.push_back(g0.back()), g0.pop_back();
    groups = {make_union(g0), make_union(g1)};
  } else {
    groups = {a};
  }
  std::vector<Type> arrows;
  for (const auto& b : groups)
    arrows.push_back(canonicalize(Type::arrow(rand_type(1), b)));
  Type f = make_union(arrows);
  auto fa = union_parts(f);
  Derivation fun = strict(ctx, f);
  std::vector<Derivation> args;
  if (fa.size() == 1) {
    args.push_back(any(ctx, canonicalize(fa[0].left())));
  } else {
    std::vector<Type> lefts;
    for (const auto& p : fa) lefts.push_back(canonicalize(p.left()));
    Type c = make_inter(lefts);
    Var y = new_world_var(c);
    for (const auto& l : lefts) args.push_back(project(ctx.g, y, c, l, ctx.d));
  }
  std::vector<Type> rights;
  for (const auto& p : fa) rights.push_back(p.right());
  Term t = Term::app(fun.conclusion.term, args[0].conclusion.term);
  std::vector<Derivation> ps{fun};
  for (auto& x : args) ps.push_back(std::move(x));
  return make_node({ctx.g, t, make_union(rights), ctx.d}, DRule::ArrowE,
                   std::move(ps));
}

Derivation Gen::union_e(const Ctx& ctx, const Type& a) {
  Name al = binder_name(ctx);
  Ctx c2 = ctx;
  c2.d = extend(ctx.d, al, a);
  Name b = al;
  Type t = a;
  if (chance(0.35)) {
    t = sub_union(a);
  } else {
    std::vector<Name> known;
    for (const auto& [n, ty] : ctx.d) known.push_back(n);
    for (const auto& [n, ty] : world_d)
      if (!ctx.d.count(n)) known.push_back(n);
    auto type_of = [&](const Name& n) -> Type {
      auto it = ctx.d.find(n);
      return it != ctx.d.end() ? it->second : world_d.at(n);
    };
    if (prefer_name && !ctx.d.count(*prefer_name) && chance(0.6)) {
      b = *prefer_name;
    } else if (!known.empty() && chance(0.5)) {
      b = known[below(known.size())];
    } else {
      Type ty = rand_strict(1);
      if (chance(0.5)) ty = make_union({ty, rand_strict(1)});
      b = new_world_name(ty);
    }
    t = sub_union(type_of(b));
  }
  Derivation body = strict(c2, t);
  Term m = Term::mu(al, b, body.conclusion.term);
  return make_node({ctx.g, m, a, ctx.d},
                   b == al ? DRule::UnionESelf : DRule::UnionENamed, {body});
}

Derivation Gen::strict(const Ctx& ctx, const Type& a) {
  if (fuel_ == 0) return leaf(ctx, a);
  double w_leaf = 1.0;
  double w_abs = a.is_arrow() ? 3.0 : 0.0;
  double w_app = 2.0;
  double w_mu = cfg_.mu_frequency * 4.0;
  double r = std::uniform_real_distribution<double>(
      0.0, w_leaf + w_abs + w_app + w_mu)(rng_);
  if (r < w_leaf) return leaf(ctx, a);
  --fuel_;
  r -= w_leaf;
  if (r < w_abs) {
    Var x = binder_var(ctx);
    Ctx c2 = ctx;
    c2.g = extend(ctx.g, x, canonicalize(a.left()));
    Derivation body = strict(c2, canonicalize(a.right()));
    return make_node({ctx.g, Term::abs(x, body.conclusion.term), a, ctx.d},
                     DRule::ArrowI, {body});
  }
  r -= w_abs;
  if (r < w_app) return arrow_e(ctx, a);
  return union_e(ctx, a);
}

Derivation Gen::finalize(const Derivation& d, const VarSet& drop_vars,
                         const NameSet& drop_names) const {
  Derivation out = d;
  LeftEnv g;
  for (const auto& [x, t] : world_g)
    if (!drop_vars.count(x)) g.emplace(x, t);
  for (const auto& [x, t] : d.conclusion.gamma) g.insert_or_assign(x, t);
  RightEnv dl;
  for (const auto& [a, t] : world_d)
    if (!drop_names.count(a)) dl.emplace(a, t);
  for (const auto& [a, t] : d.conclusion.delta) dl.insert_or_assign(a, t);
  out.conclusion.gamma = canonicalize(g);
  out.conclusion.delta = canonicalize(dl);
  out.conclusion.type = canonicalize(d.conclusion.type);
  out.premises.clear();
  for (const auto& p : d.premises)
    out.premises.push_back(finalize(p, drop_vars, drop_names));
  return out;
}

}  // namespace lammu::detail
