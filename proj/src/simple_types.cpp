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

#include "lammu/simple_types.hpp"

#include <map>
#include <stdexcept>

#include "lammu/grammar.hpp"

namespace lammu {

const char* srule_name(SRule r) {
  switch (r) {
    case SRule::Ax: return "Ax";
    case SRule::ArrowI: return "ArrowI";
    case SRule::ArrowE: return "ArrowE";
    case SRule::Mu: return "Mu";
  }
  return "?";
}

SRule parse_srule(std::string_view s) {
  for (SRule r : {SRule::Ax, SRule::ArrowI, SRule::ArrowE, SRule::Mu})
    if (s == srule_name(r)) return r;
  throw std::invalid_argument("unknown rule '" + std::string(s) + "'");
}

std::size_t SimpleDerivation::size() const {
  std::size_t n = 1;
  for (const auto& p : premises) n += p.size();
  return n;
}

namespace {

bool is_meta(const Type& t) { return t.is_var() && t.name()[0] == '?'; }

// First-order unification; metavariables are type variables spelled ?n,
// which the parser can never produce. Judgment variables and bot are
// rigid constants.
class Unifier {
 public:
  Type fresh() { return Type::var("?" + std::to_string(next_++)); }

  Type resolve(const Type& t) const {
    if (is_meta(t)) {
      auto it = sub_.find(t.name());
      return it == sub_.end() ? t : resolve(it->second);
    }
    if (t.is_arrow()) return Type::arrow(resolve(t.left()), resolve(t.right()));
    return t;
  }

  std::optional<UntypableReport> unify(const Type& a0, const Type& b0) {
    Type a = walk(a0), b = walk(b0);
    if (is_meta(a) || is_meta(b)) {
      if (!is_meta(a)) std::swap(a, b);
      if (b == a) return std::nullopt;
      Type rb = resolve(b);
      if (occurs(a.name(), rb))
        return UntypableReport{"occurs", a.text(), rb.text(),
                               a.text() + " occurs in " + rb.text()};
      sub_.emplace(a.name(), b);
      return std::nullopt;
    }
    if (a.is_arrow() && b.is_arrow()) {
      if (auto r = unify(a.left(), b.left())) return r;
      return unify(a.right(), b.right());
    }
    if (a == b) return std::nullopt;
    Type ra = resolve(a), rb = resolve(b);
    return UntypableReport{"clash", ra.text(), rb.text(),
                           "cannot unify " + ra.text() + " with " + rb.text()};
  }

 private:
  Type walk(const Type& t) const {
    if (is_meta(t)) {
      auto it = sub_.find(t.name());
      if (it != sub_.end()) return walk(it->second);
    }
    return t;
  }

  bool occurs(const std::string& n, const Type& t) const {
    if (t.is_var()) return t.name() == n;
    if (t.is_arrow()) return occurs(n, t.left()) || occurs(n, t.right());
    return false;
  }

  std::map<std::string, Type> sub_;
  int next_ = 0;
};

struct Pending {
  SRule rule;
  LeftEnv g;
  Term m;
  Type t;
  RightEnv d;
  std::vector<Pending> kids;
};

struct GenFailure {
  SimpleFailure failure;
  UntypableReport report;
};

struct Generator {
  Unifier u;

  Judgment resolved(const LeftEnv& g, const Term& m, const Type& t,
                    const RightEnv& d) const {
    Judgment j{{}, m, u.resolve(t), {}};
    for (const auto& [x, ty] : g) j.gamma.emplace(x, u.resolve(ty));
    for (const auto& [a, ty] : d) j.delta.emplace(a, u.resolve(ty));
    return j;
  }

  [[noreturn]] void fail(SRule r, const LeftEnv& g, const Term& m,
                         const Type& t, const RightEnv& d,
                         UntypableReport rep) {
    SimpleFailure f{r, print_judgment(resolved(g, m, t, d)), rep.detail};
    throw GenFailure{std::move(f), std::move(rep)};
  }

  void need(std::optional<UntypableReport> r, SRule rule, const LeftEnv& g,
            const Term& m, const Type& t, const RightEnv& d) {
    if (r) fail(rule, g, m, t, d, std::move(*r));
  }

  Pending gen(const LeftEnv& g, const Term& m, const Type& t,
              const RightEnv& d) {
    Pending p{SRule::Ax, g, m, t, d, {}};
    switch (m.kind()) {
      case Term::Kind::Var: {
        auto it = g.find(m.var());
        if (it == g.end())
          fail(SRule::Ax, g, m, t, d,
               {"unbound", m.var().text, "",
                "'" + m.var().text + "' is not in the left environment"});
        need(u.unify(it->second, t), SRule::Ax, g, m, t, d);
        return p;
      }
      case Term::Kind::Abs: {
        p.rule = SRule::ArrowI;
        Type a = u.fresh(), b = u.fresh();
        need(u.unify(t, Type::arrow(a, b)), SRule::ArrowI, g, m, t, d);
        p.kids.push_back(gen(extend(g, m.var(), a), m.body(), b, d));
        return p;
      }
      case Term::Kind::App: {
        p.rule = SRule::ArrowE;
        Type a = u.fresh();
        p.kids.push_back(gen(g, m.fun(), Type::arrow(a, t), d));
        p.kids.push_back(gen(g, m.arg(), a, d));
        return p;
      }
      case Term::Kind::Mu: {
        p.rule = SRule::Mu;
        RightEnv d2 = extend(d, m.bound(), t);
        auto it = d2.find(m.named());
        if (it == d2.end())
          fail(SRule::Mu, g, m, t, d,
               {"unbound", m.named().text, "",
                "name '" + m.named().text +
                    "' is not in the right environment"});
        p.kids.push_back(gen(g, m.body(), it->second, d2));
        return p;
      }
    }
    return p;
  }
};

// Replaces metavariables by type variables named in order of appearance.
struct Grounder {
  std::set<std::string> avoid;
  std::map<std::string, Type> names;
  std::size_t counter = 0;

  std::string next_name() {
    for (;;) {
      std::size_t k = counter++;
      std::string n(1, static_cast<char>('A' + k % 26));
      if (k >= 26) n += std::to_string(k / 26);
      if (!avoid.count(n)) return n;
    }
  }

  Type ground(const Type& t) {
    if (is_meta(t)) {
      auto it = names.find(t.name());
      if (it != names.end()) return it->second;
      Type v = Type::var(next_name());
      names.emplace(t.name(), v);
      return v;
    }
    if (t.is_arrow()) {
      Type l = ground(t.left());
      return Type::arrow(l, ground(t.right()));
    }
    return t;
  }
};

void collect_type_vars(const Type& t, std::set<std::string>& out) {
  if (t.is_var()) {
    out.insert(t.name());
  } else if (t.is_arrow()) {
    collect_type_vars(t.left(), out);
    collect_type_vars(t.right(), out);
  } else {
    for (const auto& p : t.parts()) collect_type_vars(p, out);
  }
}

bool curry_judgment(const Judgment& j, std::string* why) {
  auto bad = [&](const Type& t) {
    if (well_formed(t, Language::Curry)) return false;
    if (why) *why = "'" + t.text() + "' is not a curry type (bot on the left "
                    "of an arrow?)";
    return true;
  };
  if (bad(j.type)) return false;
  for (const auto& [x, t] : j.gamma)
    if (bad(t)) return false;
  for (const auto& [a, t] : j.delta)
    if (bad(t)) return false;
  return true;
}

SimpleDerivation finish(const Pending& p, const Unifier& u, Grounder& gr) {
  SimpleDerivation d{Judgment{{}, p.m, gr.ground(u.resolve(p.t)), {}}, p.rule,
                     {}};
  for (const auto& [x, t] : p.g) d.conclusion.gamma.emplace(x, gr.ground(u.resolve(t)));
  for (const auto& [a, t] : p.d) d.conclusion.delta.emplace(a, gr.ground(u.resolve(t)));
  for (const auto& k : p.kids) d.premises.push_back(finish(k, u, gr));
  return d;
}

// First node (pre-order) whose judgment leaves the curry language.
const SimpleDerivation* first_non_curry(const SimpleDerivation& d,
                                        std::string* why) {
  if (!curry_judgment(d.conclusion, why)) return &d;
  for (const auto& p : d.premises)
    if (auto r = first_non_curry(p, why)) return r;
  return nullptr;
}

struct SimpleChecker {
  std::vector<std::size_t> path;
  std::string reason;

  bool fail(std::string r) {
    reason = std::move(r);
    return false;
  }

  bool same_envs(const Judgment& a, const LeftEnv& g, const RightEnv& d) {
    return env_equal(a.gamma, g) && env_equal(a.delta, d);
  }

  bool node(const SimpleDerivation& n) {
    const Judgment& c = n.conclusion;
    std::string why;
    if (!curry_judgment(c, &why)) return fail(why);
    const Term& m = c.term;
    auto count = [&](std::size_t k) {
      if (n.premises.size() == k) return true;
      return fail(std::string(srule_name(n.rule)) + " expects " +
                  std::to_string(k) + " premise(s)");
    };
    switch (n.rule) {
      case SRule::Ax: {
        if (!m.is_var()) return fail("Ax needs a variable subject");
        if (!count(0)) return false;
        auto it = c.gamma.find(m.var());
        if (it == c.gamma.end() || !(it->second == c.type))
          return fail("'" + m.var().text + ":" + c.type.text() +
                      "' is not in the left environment");
        return true;
      }
      case SRule::ArrowI: {
        if (!m.is_abs()) return fail("ArrowI needs an abstraction subject");
        if (!c.type.is_arrow()) return fail("ArrowI needs an arrow type");
        if (!count(1)) return false;
        const Judgment& p = n.premises[0].conclusion;
        if (!(p.term == m.body()) || !(p.type == c.type.right()) ||
            !same_envs(p, extend(c.gamma, m.var(), c.type.left()), c.delta))
          return fail("ArrowI premise does not match");
        return true;
      }
      case SRule::ArrowE: {
        if (!m.is_app()) return fail("ArrowE needs an application subject");
        if (!count(2)) return false;
        const Judgment& f = n.premises[0].conclusion;
        const Judgment& a = n.premises[1].conclusion;
        if (!(f.term == m.fun()) || !(a.term == m.arg()) ||
            !same_envs(f, c.gamma, c.delta) || !same_envs(a, c.gamma, c.delta))
          return fail("ArrowE premises do not match");
        if (!f.type.is_arrow() || !(f.type.left() == a.type) ||
            !(f.type.right() == c.type))
          return fail("ArrowE needs '" + a.type.text() + " -> " +
                      c.type.text() + "' for the function");
        return true;
      }
      case SRule::Mu: {
        if (!m.is_mu()) return fail("Mu needs a mu subject");
        if (!count(1)) return false;
        const Judgment& p = n.premises[0].conclusion;
        RightEnv d2 = extend(c.delta, m.bound(), c.type);
        auto it = d2.find(m.named());
        if (it == d2.end())
          return fail("name '" + m.named().text +
                      "' is not in the right environment");
        if (!(p.term == m.body()) || !same_envs(p, c.gamma, d2) ||
            !(p.type == it->second))
          return fail("Mu premise does not match");
        return true;
      }
    }
    return fail("unknown rule");
  }

  bool walk(const SimpleDerivation& d) {
    if (!node(d)) return false;
    for (std::size_t i = 0; i < d.premises.size(); ++i) {
      path.push_back(i);
      if (!walk(d.premises[i])) return false;
      path.pop_back();
    }
    return true;
  }
};

void render(const SimpleDerivation& d, std::size_t indent, std::string& out) {
  out += std::string(indent, ' ') + srule_name(d.rule) + "  " +
         print_judgment(d.conclusion) + "\n";
  for (const auto& p : d.premises) render(p, indent + 2, out);
}

}  // namespace

SimpleCheck check_simple(const Judgment& j) {
  std::string why;
  if (!curry_judgment(j, &why))
    return {std::nullopt, SimpleFailure{SRule::Ax, print_judgment(j), why}};
  Generator g;
  std::optional<Pending> root;
  try {
    root = g.gen(j.gamma, j.term, j.type, j.delta);
  } catch (const GenFailure& f) {
    return {std::nullopt, f.failure};
  }
  Grounder gr;
  collect_type_vars(j.type, gr.avoid);
  for (const auto& [x, t] : j.gamma) collect_type_vars(t, gr.avoid);
  for (const auto& [a, t] : j.delta) collect_type_vars(t, gr.avoid);
  SimpleDerivation d = finish(*root, g.u, gr);
  if (auto bad = first_non_curry(d, &why))
    return {std::nullopt, SimpleFailure{bad->rule,
                                        print_judgment(bad->conclusion), why}};
  return {std::move(d), std::nullopt};
}

CheckResult check_simple_derivation(const SimpleDerivation& d) {
  SimpleChecker c;
  if (c.walk(d)) return {};
  return CheckResult{false, c.path, c.reason};
}

InferResult infer_simple(const Term& m) {
  Generator g;
  LeftEnv gamma;
  RightEnv delta;
  for (const auto& x : free_term_vars(m)) gamma.emplace(x, g.u.fresh());
  for (const auto& a : free_names(m)) delta.emplace(a, g.u.fresh());
  Type t = g.u.fresh();
  try {
    g.gen(gamma, m, t, delta);
  } catch (const GenFailure& f) {
    return {std::nullopt, f.report};
  }
  Grounder gr;
  SimpleTyping out{{}, gr.ground(g.u.resolve(t)), {}};
  for (const auto& [x, ty] : gamma) out.gamma.emplace(x, gr.ground(g.u.resolve(ty)));
  for (const auto& [a, ty] : delta) out.delta.emplace(a, gr.ground(g.u.resolve(ty)));
  return {std::move(out), std::nullopt};
}

Derivation embed_simple(const SimpleDerivation& d) {
  Derivation out{d.conclusion, DRule::InterE, {}, 0};
  for (const auto& p : d.premises) out.premises.push_back(embed_simple(p));
  switch (d.rule) {
    case SRule::Ax: out.rule = DRule::InterE; break;
    case SRule::ArrowI: out.rule = DRule::ArrowI; break;
    case SRule::ArrowE: out.rule = DRule::ArrowE; break;
    case SRule::Mu:
      out.rule = d.conclusion.term.bound() == d.conclusion.term.named()
                     ? DRule::UnionESelf
                     : DRule::UnionENamed;
      break;
  }
  return out;
}

std::string render_simple_derivation(const SimpleDerivation& d) {
  std::string out;
  render(d, 0, out);
  return out;
}

}  // namespace lammu
