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

#include "lammu/reduction.hpp"

#include "lammu/grammar.hpp"

namespace lammu {

const char* rule_name(Rule r) {
  switch (r) {
    case Rule::Beta: return "beta";
    case Rule::Mu: return "mu";
    case Rule::Renaming: return "renaming";
    case Rule::Erasing: return "erasing";
    case Rule::EtaMu: return "eta_mu";
  }
  return "?";
}

Rule parse_rule(std::string_view s) {
  for (Rule r : {Rule::Beta, Rule::Mu, Rule::Renaming, Rule::Erasing,
                 Rule::EtaMu})
    if (s == rule_name(r)) return r;
  throw std::invalid_argument("unknown rule '" + std::string(s) + "'");
}

RuleSet parse_rule_set(std::string_view s) {
  RuleSet out;
  std::size_t i = 0;
  while (i <= s.size()) {
    std::size_t j = s.find(',', i);
    if (j == std::string_view::npos) j = s.size();
    std::string_view item = s.substr(i, j - i);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (!item.empty()) out.insert(parse_rule(item));
    i = j + 1;
  }
  return out;
}

namespace {

template <class S, class T>
bool contains(const S& s, const T& x) {
  return s.find(x) != s.end();
}

// Renames the binder of an Abs so that it avoids `avoid`.
Term rebind_abs(const Term& m, const VarSet& avoid) {
  VarSet all = avoid;
  VarSet fv = free_term_vars(m.body());
  all.insert(fv.begin(), fv.end());
  Var y = fresh_var(all, m.var());
  return Term::abs(y, subst_term(m.body(), m.var(), Term::var(y)));
}

// Renames the binder of a Mu so that it avoids `avoid`.
Term rebind_mu(const Term& m, const NameSet& avoid) {
  NameSet all = avoid;
  NameSet an = all_names(m.body());
  all.insert(an.begin(), an.end());
  all.insert(m.named());
  const Name& a = m.bound();
  Name a2 = fresh_name(all, a);
  Name named = m.named() == a ? a2 : m.named();
  return Term::mu(a2, named, rename_name(m.body(), a, a2));
}

struct TermSubst {
  const Var& x;
  const Term& n;
  VarSet fv_n;
  NameSet fn_n;

  Term go(const Term& m) {
    switch (m.kind()) {
      case Term::Kind::Var: return m.var() == x ? n : m;
      case Term::Kind::App:
        return Term::app(go(m.fun()), go(m.arg()));
      case Term::Kind::Abs: {
        if (m.var() == x || !contains(free_term_vars(m.body()), x)) return m;
        if (contains(fv_n, m.var())) {
          VarSet avoid = fv_n;
          avoid.insert(x);
          Term r = rebind_abs(m, avoid);
          return Term::abs(r.var(), go(r.body()));
        }
        return Term::abs(m.var(), go(m.body()));
      }
      case Term::Kind::Mu: {
        if (!contains(free_term_vars(m.body()), x)) return m;
        if (contains(fn_n, m.bound())) {
          Term r = rebind_mu(m, fn_n);
          return Term::mu(r.bound(), r.named(), go(r.body()));
        }
        return Term::mu(m.bound(), m.named(), go(m.body()));
      }
    }
    return m;
  }
};

struct StructSubst {
  const Name& a;
  const Term& n;
  const Name& g;
  VarSet fv_n;
  NameSet fn_n;

  Term go(const Term& m) {
    switch (m.kind()) {
      case Term::Kind::Var: return m;
      case Term::Kind::App:
        return Term::app(go(m.fun()), go(m.arg()));
      case Term::Kind::Abs: {
        if (!contains(free_names(m), a)) return m;
        if (contains(fv_n, m.var())) {
          Term r = rebind_abs(m, fv_n);
          return Term::abs(r.var(), go(r.body()));
        }
        return Term::abs(m.var(), go(m.body()));
      }
      case Term::Kind::Mu: {
        if (m.bound() == a || !contains(free_names(m), a)) return m;
        Term r = m;
        if (contains(fn_n, m.bound()) || m.bound() == g) {
          NameSet avoid = fn_n;
          avoid.insert(g);
          avoid.insert(a);
          r = rebind_mu(m, avoid);
        }
        Term body = go(r.body());
        if (r.named() == a) return Term::mu(r.bound(), g, Term::app(body, n));
        return Term::mu(r.bound(), r.named(), body);
      }
    }
    return m;
  }
};

Term rename_impl(const Term& m, const Name& g, const Name& b) {
  switch (m.kind()) {
    case Term::Kind::Var: return m;
    case Term::Kind::App:
      return Term::app(rename_impl(m.fun(), g, b), rename_impl(m.arg(), g, b));
    case Term::Kind::Abs:
      if (!contains(free_names(m.body()), g)) return m;
      return Term::abs(m.var(), rename_impl(m.body(), g, b));
    case Term::Kind::Mu: {
      if (m.bound() == g || !contains(free_names(m), g)) return m;
      Term r = m;
      if (m.bound() == b) r = rebind_mu(m, NameSet{g, b});
      Name named = r.named() == g ? b : r.named();
      return Term::mu(r.bound(), named, rename_impl(r.body(), g, b));
    }
  }
  return m;
}

// The contractum of a root redex.
Term contract(const Term& m, Rule rule) {
  switch (rule) {
    case Rule::Beta:
      return subst_term(m.fun().body(), m.fun().var(), m.arg());
    case Rule::Mu: {
      const Term& f = m.fun();
      const Term& n = m.arg();
      Name g = fresh_name(all_names(m), f.bound());
      Term body = subst_structural(f.body(), f.bound(), n, g);
      if (f.named() == f.bound()) return Term::mu(g, g, Term::app(body, n));
      return Term::mu(g, f.named(), body);
    }
    case Rule::Renaming: {
      const Term& inner = m.body();
      const Name& b = m.named();
      const Name& g = inner.bound();
      Name d = inner.named() == g ? b : inner.named();
      return Term::mu(m.bound(), d, rename_name(inner.body(), g, b));
    }
    case Rule::Erasing:
      return m.body();
    case Rule::EtaMu: {
      Var x = fresh_var(all_term_vars(m), Var{"x"});
      Name g = fresh_name(all_names(m), m.bound());
      Term xv = Term::var(x);
      Term body = subst_structural(m.body(), m.bound(), xv, g);
      if (m.named() == m.bound())
        return Term::abs(x, Term::mu(g, g, Term::app(body, xv)));
      return Term::abs(x, Term::mu(g, m.named(), body));
    }
  }
  return m;
}

void collect_redexes(const Term& m, const RuleSet& enabled, Position& pos,
                     std::vector<Redex>& out) {
  for (Rule r : enabled)
    if (is_redex(m, r)) out.push_back({pos, r});
  for (std::size_t i = 0; i < m.num_children(); ++i) {
    pos.push_back(i);
    collect_redexes(m.child(i), enabled, pos, out);
    pos.pop_back();
  }
}

bool first_redex(const Term& m, const RuleSet& enabled, Position& pos,
                 Rule& rule) {
  for (Rule r : enabled)
    if (is_redex(m, r)) {
      rule = r;
      return true;
    }
  for (std::size_t i = 0; i < m.num_children(); ++i) {
    pos.push_back(i);
    if (first_redex(m.child(i), enabled, pos, rule)) return true;
    pos.pop_back();
  }
  return false;
}

}  // namespace

Term subst_term(const Term& m, const Var& x, const Term& n) {
  if (!contains(free_term_vars(m), x)) return m;
  TermSubst s{x, n, free_term_vars(n), free_names(n)};
  return s.go(m);
}

Term subst_structural(const Term& m, const Name& a, const Term& n,
                      const Name& g) {
  if (g == a)
    throw FreshnessViolation("structural substitution target '" + g.text +
                             "' equals the substituted name");
  if (contains(free_names(m), g) || contains(free_names(n), g))
    throw FreshnessViolation("name '" + g.text + "' is not fresh");
  StructSubst s{a, n, g, free_term_vars(n), free_names(n)};
  return s.go(m);
}

Term rename_name(const Term& m, const Name& g, const Name& b) {
  if (g == b) return m;
  return rename_impl(m, g, b);
}

bool is_redex(const Term& m, Rule rule) {
  switch (rule) {
    case Rule::Beta: return m.is_app() && m.fun().is_abs();
    case Rule::Mu: return m.is_app() && m.fun().is_mu();
    case Rule::Renaming: return m.is_mu() && m.body().is_mu();
    case Rule::Erasing:
      return m.is_mu() && m.bound() == m.named() &&
             !contains(free_names(m.body()), m.bound());
    case Rule::EtaMu: return m.is_mu();
  }
  return false;
}

std::vector<Redex> redexes(const Term& m, const RuleSet& enabled) {
  std::vector<Redex> out;
  Position pos;
  collect_redexes(m, enabled, pos, out);
  return out;
}

Term step(const Term& m, const Position& at, Rule rule) {
  if (!is_valid_position(m, at))
    throw NotARedex("no subterm at " + format_position(at));
  const Term& sub = subterm_at(m, at);
  if (!is_redex(sub, rule))
    throw NotARedex("no " + std::string(rule_name(rule)) + " redex at " +
                    format_position(at));
  return replace_at(m, at, contract(sub, rule));
}

ReductionTrace normalize(const Term& m, const RuleSet& enabled,
                         std::size_t fuel) {
  ReductionTrace t{m, {}, false};
  Term cur = m;
  for (;;) {
    Position pos;
    Rule rule{};
    if (!first_redex(cur, enabled, pos, rule)) break;
    if (t.steps.size() >= fuel) {
      t.fuel_exhausted = true;
      break;
    }
    cur = replace_at(cur, pos, contract(subterm_at(cur, pos), rule));
    t.steps.push_back({std::move(pos), rule, cur});
  }
  return t;
}

std::string format_trace(const ReductionTrace& t) {
  std::string out;
  for (const auto& s : t.steps)
    out += format_position(s.pos) + " " + rule_name(s.rule) + " ~> " +
           print_term(s.result) + "\n";
  return out;
}

}  // namespace lammu
