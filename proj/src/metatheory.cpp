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

#include "lammu/metatheory.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "gen.hpp"
#include "lammu/grammar.hpp"
#include "lammu/transform.hpp"

namespace lammu {

using detail::Gen;
using detail::mix_seed;

void GenConfig::validate() const {
  if (max_term_size == 0) throw std::invalid_argument("max_term_size is 0");
  if (name_pool == 0) throw std::invalid_argument("name_pool is 0");
  if (var_pool == 0) throw std::invalid_argument("var_pool is 0");
  if (!(mu_frequency >= 0.0 && mu_frequency <= 1.0))
    throw std::invalid_argument("mu_frequency must lie in [0, 1]");
}

namespace {

std::size_t fuel_for(Gen& g, std::size_t max_size) {
  return g.below((max_size + 1) / 2 + 1);
}

}  // namespace

TypedCase gen_case(const GenConfig& cfg, std::uint64_t index) {
  cfg.validate();
  Gen g(cfg, mix_seed(cfg.seed, index));
  g.set_fuel(fuel_for(g, cfg.max_term_size));
  Type goal = g.chance(0.1)
                  ? make_inter({g.rand_strict(1), g.rand_strict(1)})
                  : g.rand_strict(2);
  Derivation d = g.finalize(g.any({}, goal));
  return TypedCase{d.conclusion, d};
}

std::vector<TypedCase> gen_typed_judgment(const GenConfig& cfg,
                                          std::size_t count) {
  std::vector<TypedCase> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(gen_case(cfg, i));
  return out;
}

std::string SuiteReport::serialize() const {
  std::ostringstream o;
  auto line = [&](const char* tag, const SuiteFailure& f) {
    o << tag << " case=" << f.case_index << " stage=" << f.stage
      << " input=" << f.input << " detail=" << f.detail << "\n";
  };
  for (const auto& f : failures) line("FAIL", f);
  for (const auto& f : misses) line("MISS", f);
  o << "STAT checks=" << checks << " root=" << root_checks
    << " constructive=" << constructive << " searched=" << searched
    << " found=" << search_found << " misses_cleared=" << misses_cleared
    << "\n";
  o << "SUITE " << suite << " RUN " << cases_run << " FAIL "
    << failures.size() << " BUDGET_MISS " << budget_misses << "\n";
  return o.str();
}

namespace {

void merge(SuiteReport& into, const SuiteReport& c) {
  into.cases_run += c.cases_run;
  into.failures.insert(into.failures.end(), c.failures.begin(),
                       c.failures.end());
  into.misses.insert(into.misses.end(), c.misses.begin(), c.misses.end());
  into.budget_misses += c.budget_misses;
  into.misses_cleared += c.misses_cleared;
  into.checks += c.checks;
  into.root_checks += c.root_checks;
  into.constructive += c.constructive;
  into.searched += c.searched;
  into.search_found += c.search_found;
}

// Runs the cases on a few threads and merges them in index order.
SuiteReport run_cases(const std::string& name, std::size_t n,
                      const std::function<SuiteReport(std::size_t)>& one) {
  std::vector<SuiteReport> results(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        results[i] = one(i);
      } catch (const std::exception& e) {
        results[i] = SuiteReport{};
        results[i].failures.push_back({i, "", "exception", e.what()});
      }
      results[i].cases_run = 1;
    }
  };
  std::size_t threads =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, 8);
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  SuiteReport out;
  out.suite = name;
  for (const auto& r : results) merge(out, r);
  return out;
}

void check_rules(const RuleSet& rules) {
  for (Rule r : rules)
    if (r != Rule::Beta && r != Rule::Mu && r != Rule::Renaming)
      throw std::invalid_argument(
          std::string("subject reduction does not hold for ") + rule_name(r) +
          "; use a subset of beta, mu, renaming");
}

std::optional<std::string> mismatch(const Derivation& d, const Judgment& want) {
  CheckResult c = check_derivation(d);
  if (!c) return c.describe();
  const Judgment& j = d.conclusion;
  if (!(j.term == want.term)) return "subject is " + print_term(j.term);
  if (!env_equal(j.gamma, want.gamma) || !env_equal(j.delta, want.delta))
    return "environments differ: " + print_judgment(j);
  if (!(canonicalize(j.type) == canonicalize(want.type)))
    return "type is " + canonicalize(j.type).text();
  return std::nullopt;
}

bool found_valid(const Judgment& j, const SearchBudget& b, bool* cut) {
  SearchResult r = derive(j, b);
  if (cut) *cut = r.cut;
  return r && !mismatch(*r.derivation, j);
}

std::vector<Derivation> components(const Derivation& d) {
  Type a = canonicalize(d.conclusion.type);
  if (!a.is_inter()) return {d};
  std::vector<Derivation> out;
  for (std::size_t j = 0; j < a.parts().size(); ++j)
    out.push_back(inter_elim(d, j));
  return out;
}

// One preservation check. Root steps must go through the proof
// transformation. Other steps are also re-derived by search: a miss is
// inconclusive, while an exhaustive miss is a genuine failure.
void preservation_check(SuiteReport& r, std::size_t i, const std::string& input,
                        bool root, const std::function<Derivation()>& build,
                        const Judgment& want, const SearchBudget& budget) {
  ++r.checks;
  if (root) ++r.root_checks;
  std::optional<std::string> why;
  try {
    why = mismatch(build(), want);
  } catch (const std::exception& e) {
    why = e.what();
  }
  if (!why) ++r.constructive;
  if (root) {
    if (why) r.failures.push_back({i, input, "constructive", *why});
    return;
  }
  ++r.searched;
  bool cut = true;
  if (found_valid(want, budget, &cut)) {
    ++r.search_found;
    return;
  }
  if (!cut) {
    r.failures.push_back({i, input, "search",
                          why ? "exhaustive search found no derivation"
                              : "exhaustive search contradicts the "
                                "constructed derivation"});
    return;
  }
  ++r.budget_misses;
  if (found_valid(want, budget.doubled(), nullptr)) {
    ++r.misses_cleared;
    return;
  }
  r.misses.push_back({i, input, "search",
                      why ? *why
                          : "search missed at doubled budget; the "
                            "constructed derivation checks"});
}

std::vector<Position> all_positions(const Term& t) {
  std::vector<Position> out;
  std::function<void(const Term&, Position&)> go = [&](const Term& s,
                                                       Position& p) {
    out.push_back(p);
    for (std::size_t k = 0; k < s.num_children(); ++k) {
      p.push_back(k);
      go(s.child(k), p);
      p.pop_back();
    }
  };
  Position p;
  go(t, p);
  return out;
}

std::string describe_step(const Judgment& j, const Position& p, Rule r) {
  return print_judgment(j) + " @ " + format_position(p) + " " + rule_name(r);
}

}  // namespace

SuiteReport suite_subject_reduction(const GenConfig& cfg,
                                    const RuleSet& rules,
                                    const SearchBudget& budget,
                                    std::size_t cases) {
  check_rules(rules);
  cfg.validate();
  return run_cases("subject-reduction", cases, [&](std::size_t i) {
    SuiteReport r;
    TypedCase tc = gen_case(cfg, i * 32);
    for (std::uint64_t k = 1; k < 32; ++k) {
      if (!redexes(tc.judgment.term, rules).empty()) break;
      tc = gen_case(cfg, i * 32 + k);
    }
    for (const Derivation& c : components(tc.derivation)) {
      const Judgment& j = c.conclusion;
      auto rs = redexes(j.term, rules);
      if (rs.size() > 6) rs.resize(6);
      for (const Redex& rd : rs) {
        Judgment want = j;
        want.term = step(j.term, rd.pos, rd.rule);
        preservation_check(
            r, i, describe_step(j, rd.pos, rd.rule), rd.pos.empty(),
            [&] { return subject_reduction(c, rd.pos, rd.rule); }, want,
            budget);
      }
    }
    return r;
  });
}

namespace {

struct Wrapper {
  std::mt19937_64 rng;
  const Term& whole;
  const LeftEnv& gamma;
  const RightEnv& delta;

  bool chance() { return rng() % 2 == 0; }

  Term some_var() {
    std::vector<Var> vs;
    for (const auto& [x, t] : gamma) vs.push_back(x);
    if (vs.empty()) return Term::var(Var{"x"});
    return Term::var(vs[rng() % vs.size()]);
  }

  std::optional<Term> beta(const Term& s) {
    VarSet avoid = all_term_vars(whole);
    for (const auto& [x, t] : gamma) avoid.insert(x);
    Var x = fresh_var(avoid, Var{"r"});
    if (chance()) {
      auto qs = all_positions(s);
      const Position& q = qs[rng() % qs.size()];
      return Term::app(Term::abs(x, replace_at(s, q, Term::var(x))),
                       subterm_at(s, q));
    }
    return Term::app(Term::abs(x, s), chance() ? some_var() : s);
  }

  std::optional<Term> mu(const Term& s) {
    if (!s.is_mu()) return std::nullopt;
    Name gam = s.bound();
    bool self = s.named() == gam;
    NameSet avoid = all_names(whole);
    for (const auto& [a, t] : delta) avoid.insert(a);
    Name al = fresh_name(avoid, Name{"k"});
    std::optional<Term> np;
    Term base = s.body();
    if (self) {
      if (!base.is_app()) return std::nullopt;
      np = base.arg();
      base = base.fun();
    }
    bool ok = true;
    std::function<Term(const Term&)> rep = [&](const Term& t) -> Term {
      switch (t.kind()) {
        case Term::Kind::Var:
          return t;
        case Term::Kind::Abs:
          return Term::abs(t.var(), rep(t.body()));
        case Term::Kind::App:
          return Term::app(rep(t.fun()), rep(t.arg()));
        case Term::Kind::Mu:
          if (t.bound() == gam) return t;
          if (t.named() == gam) {
            const Term& b = t.body();
            if (!b.is_app()) {
              ok = false;
              return t;
            }
            if (!np) np = b.arg();
            if (!alpha_eq(*np, b.arg())) {
              ok = false;
              return t;
            }
            return Term::mu(t.bound(), al, rep(b.fun()));
          }
          return Term::mu(t.bound(), t.named(), rep(t.body()));
      }
      return t;
    };
    Term body = rep(base);
    if (!ok) return std::nullopt;
    if (!np) np = some_var();
    return Term::app(Term::mu(al, self ? al : s.named(), body), *np);
  }

  std::optional<Term> renaming(const Term& s, const NameSet& scope) {
    if (!s.is_mu()) return std::nullopt;
    NameSet avoid = all_names(whole);
    for (const auto& [a, t] : delta) avoid.insert(a);
    Name gm = fresh_name(avoid, Name{"h"});
    Name beta = s.named();
    Name dl = gm;
    if (chance()) {
      std::vector<Name> cands{s.bound()};
      for (const auto& n : scope) cands.push_back(n);
      beta = cands[rng() % cands.size()];
      dl = s.named();
    }
    std::function<Term(const Term&)> rep = [&](const Term& t) -> Term {
      switch (t.kind()) {
        case Term::Kind::Var:
          return t;
        case Term::Kind::Abs:
          return Term::abs(t.var(), rep(t.body()));
        case Term::Kind::App:
          return Term::app(rep(t.fun()), rep(t.arg()));
        case Term::Kind::Mu:
          if (t.bound() == beta) return t;
          return Term::mu(t.bound(),
                          t.named() == beta && chance() ? gm : t.named(),
                          rep(t.body()));
      }
      return t;
    };
    return Term::mu(s.bound(), beta, Term::mu(gm, dl, rep(s.body())));
  }
};

// Names bound in the right environment at the first node on the way to pos.
NameSet names_in_scope(const Derivation& d, const Position& pos) {
  const Derivation* cur = &d;
  std::size_t k = 0;
  while (k < pos.size()) {
    if (cur->premises.empty()) break;
    if (cur->rule == DRule::InterI || cur->rule == DRule::Weaken ||
        cur->rule == DRule::Thin) {
      cur = &cur->premises[0];
      continue;
    }
    std::size_t idx = 0;
    if (cur->rule == DRule::ArrowE && pos[k] == 1) idx = 1;
    cur = &cur->premises[idx];
    ++k;
  }
  NameSet out;
  if (k == pos.size())
    for (const auto& [a, t] : cur->conclusion.delta) out.insert(a);
  return out;
}

}  // namespace

SuiteReport suite_subject_expansion(const GenConfig& cfg,
                                    const RuleSet& rules,
                                    const SearchBudget& budget,
                                    std::size_t cases) {
  check_rules(rules);
  cfg.validate();
  return run_cases("subject-expansion", cases, [&](std::size_t i) {
    SuiteReport r;
    TypedCase tc = gen_case(cfg, i);
    std::mt19937_64 rng(mix_seed(cfg.seed ^ 0x5e5e5e5eULL, i));
    for (const Derivation& c : components(tc.derivation)) {
      const Judgment& j = c.conclusion;
      auto ps = all_positions(j.term);
      std::vector<Position> picked{ps[0]};
      for (int k = 0; k < 2 && ps.size() > 1; ++k)
        picked.push_back(ps[1 + rng() % (ps.size() - 1)]);
      for (const Position& pos : picked) {
        for (Rule rule : {Rule::Beta, Rule::Mu, Rule::Renaming}) {
          if (!rules.count(rule)) continue;
          Wrapper w{std::mt19937_64(rng()), j.term, j.gamma, j.delta};
          const Term& s = subterm_at(j.term, pos);
          std::optional<Term> sub;
          if (rule == Rule::Beta) sub = w.beta(s);
          if (rule == Rule::Mu) sub = w.mu(s);
          if (rule == Rule::Renaming)
            sub = w.renaming(s, names_in_scope(c, pos));
          if (!sub) continue;
          Term m = replace_at(j.term, pos, *sub);
          try {
            if (!alpha_eq(step(m, pos, rule), j.term)) continue;
          } catch (const NotARedex&) {
            continue;
          }
          Judgment want = j;
          want.term = m;
          preservation_check(
              r, i, describe_step(want, pos, rule), pos.empty(),
              [&] { return subject_expansion(c, m, pos, rule); }, want,
              budget);
        }
      }
    }
    return r;
  });
}

namespace {

// Witness search shared by both substitution suites: `attempt` tries one
// candidate at a budget.
void witness_search(SuiteReport& r, std::size_t i, const std::string& input,
                    const std::vector<Type>& cands, const SearchBudget& budget,
                    const std::function<bool(const Type&, const SearchBudget&)>&
                        attempt) {
  ++r.checks;
  ++r.searched;
  auto any_of = [&](const SearchBudget& b) {
    for (const auto& c : cands)
      if (attempt(c, b)) return true;
    return false;
  };
  if (any_of(budget)) {
    ++r.search_found;
    return;
  }
  ++r.budget_misses;
  if (any_of(budget.doubled())) {
    ++r.misses_cleared;
    return;
  }
  r.misses.push_back({i, input, "witness-search", "no witness found"});
}

void constructive_check(SuiteReport& r, std::size_t i,
                        const std::string& input, const std::string& stage,
                        const std::function<std::optional<std::string>()>& f) {
  ++r.checks;
  std::optional<std::string> bad;
  try {
    bad = f();
  } catch (const std::exception& e) {
    bad = e.what();
  }
  if (bad)
    r.failures.push_back({i, input, stage, *bad});
  else
    ++r.constructive;
}

std::vector<Type> with_universe(Type first, const Judgment& j,
                                const SearchBudget& budget, std::size_t n) {
  std::vector<Type> out{std::move(first)};
  for (const auto& t : witness_universe(j, budget)) {
    if (out.size() >= n) break;
    if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
  }
  return out;
}

}  // namespace

SuiteReport suite_term_subst(const GenConfig& cfg, const SearchBudget& budget,
                             std::size_t cases) {
  cfg.validate();
  return run_cases("term-subst", cases, [&](std::size_t i) {
    SuiteReport r;
    Gen g(cfg, mix_seed(cfg.seed ^ 0x7e57ULL, i));
    Type c0 = g.rand_type(1);
    g.set_fuel(fuel_for(g, cfg.max_term_size / 2));
    Derivation dn = (c0.is_inter() && !c0.is_top()) || g.chance(0.25)
                        ? (c0.is_top() ? g.any({}, c0) : g.leaf({}, c0))
                        : g.any({}, c0);
    Var x = g.new_world_var(c0);
    g.prefer_var = x;
    for (const auto& p : inter_parts(c0)) g.hints.push_back(p);
    g.set_fuel(fuel_for(g, cfg.max_term_size));
    Type a = g.rand_strict(2);
    Derivation dm = g.finalize(g.strict({}, a));
    dn = g.finalize(dn, {x});
    const Term& m = dm.conclusion.term;
    const Term& n = dn.conclusion.term;
    LeftEnv g0 = dn.conclusion.gamma;
    const RightEnv& d0 = dm.conclusion.delta;
    std::string input = print_judgment(dm.conclusion) + " [" +
                        print_term(n) + "/" + x.text + "]";

    Judgment want{g0, subst_term(m, x, n), a, d0};
    std::optional<Derivation> s;
    constructive_check(r, i, input, "construct", [&] {
      s = term_subst_lemma(dm, x, dn);
      return mismatch(*s, want);
    });
    if (!s) return r;
    std::optional<TermSubstWitness> w;
    constructive_check(r, i, input, "decompose", [&] {
      w = term_subst_decompose(*s, m, x, n);
      if (auto bad = mismatch(w->dm, {extend(g0, x, w->c), m, a, d0}))
        return bad;
      return mismatch(w->dn, {g0, n, w->c, d0});
    });
    if (!w) return r;
    auto cands = with_universe(w->c, {g0, n, a, d0}, budget, 4);
    witness_search(r, i, input, cands, budget,
                   [&](const Type& c, const SearchBudget& b) {
                     return found_valid({extend(g0, x, c), m, a, d0}, b,
                                        nullptr) &&
                            found_valid({g0, n, c, d0}, b, nullptr);
                   });
    return r;
  });
}

SuiteReport suite_struct_subst(const GenConfig& cfg,
                               const SearchBudget& budget,
                               std::size_t cases) {
  cfg.validate();
  return run_cases("struct-subst", cases, [&](std::size_t i) {
    SuiteReport r;
    Gen g(cfg, mix_seed(cfg.seed ^ 0x57a7ULL, i));
    std::size_t n_arrows = g.chance(0.3) ? 2 : 1;
    std::vector<Type> arrows;
    for (std::size_t k = 0; k < n_arrows; ++k)
      arrows.push_back(
          canonicalize(Type::arrow(g.rand_type(1), g.rand_strict(1))));
    Type f = make_union(arrows);
    auto fa = union_parts(f);
    g.set_fuel(fuel_for(g, cfg.max_term_size / 2));
    std::vector<Derivation> dn;
    if (fa.size() == 1) {
      dn.push_back(g.any({}, canonicalize(fa[0].left())));
    } else {
      std::vector<Type> lefts;
      for (const auto& p : fa) lefts.push_back(canonicalize(p.left()));
      Type c = make_inter(lefts);
      Var y = g.new_world_var(c);
      for (const auto& l : lefts) dn.push_back(detail::project({}, y, c, l, {}));
    }
    Name al = g.new_world_name(f);
    g.prefer_name = al;
    g.hints = fa;
    g.set_fuel(fuel_for(g, cfg.max_term_size));
    Type cty = g.rand_strict(2);
    Derivation dm = g.finalize(g.strict({}, cty));
    for (auto& x : dn) x = g.finalize(x, {}, {al});
    const Term& m = dm.conclusion.term;
    const Term& n = dn[0].conclusion.term;
    const LeftEnv& g0 = dm.conclusion.gamma;
    RightEnv d0 = dn[0].conclusion.delta;
    NameSet avoid = all_names(m);
    for (const auto& a : all_names(n)) avoid.insert(a);
    for (const auto& [a, t] : dm.conclusion.delta) avoid.insert(a);
    Name gm = fresh_name(avoid, Name{"g"});
    std::vector<Type> rights;
    for (const auto& p : fa) rights.push_back(p.right());
    Type b = make_union(rights);
    std::string input = print_judgment(dm.conclusion) + " [" +
                        print_term(n) + "." + gm.text + "/" + al.text + "]";

    Judgment want{g0, subst_structural(m, al, n, gm), cty, extend(d0, gm, b)};
    std::optional<Derivation> s;
    constructive_check(r, i, input, "construct", [&] {
      s = struct_subst_lemma(dm, al, n, dn, gm);
      return mismatch(*s, want);
    });
    if (!s) return r;
    std::optional<StructSubstWitness> w;
    constructive_check(
        r, i, input, "decompose", [&]() -> std::optional<std::string> {
          w = struct_subst_decompose(*s, m, al, n, gm);
          if (auto bad = mismatch(w->dm, {g0, m, cty, extend(d0, al, w->arrows)}))
            return bad;
          auto wa = union_parts(w->arrows);
          for (std::size_t k = 0; k < wa.size(); ++k)
            if (auto bad = mismatch(w->dn[k], {g0, n, wa[k].left(), d0}))
              return bad;
          return std::nullopt;
        });
    if (!w) return r;
    // Candidates for the arrows: the decomposition's, then one domain for
    // every codomain component.
    std::vector<Type> cands{w->arrows};
    for (const auto& l : with_universe(Type::top(), {g0, n, b, d0}, budget, 3)) {
      std::vector<Type> as;
      for (const auto& part : union_parts(b))
        as.push_back(canonicalize(Type::arrow(l, part)));
      Type cand = make_union(as);
      if (std::find(cands.begin(), cands.end(), cand) == cands.end())
        cands.push_back(cand);
    }
    witness_search(r, i, input, cands, budget,
                   [&](const Type& cand, const SearchBudget& bb) {
                     if (!found_valid({g0, m, cty, extend(d0, al, cand)}, bb,
                                      nullptr))
                       return false;
                     for (const auto& p : union_parts(cand))
                       if (!found_valid({g0, n, p.left(), d0}, bb, nullptr))
                         return false;
                     return true;
                   });
    return r;
  });
}

std::string ErasingCounterexample::describe() const {
  std::ostringstream o;
  const Judgment& j = mu_derivation.conclusion;
  o << "derivable:     " << print_judgment(j) << "\n";
  o << "erasing step:  " << print_term(j.term) << " -> "
    << print_term(erased.term) << "\n";
  o << "not derivable: " << print_judgment(erased) << " (depth "
    << erased_budget.depth << ", width " << erased_budget.width
    << (erased_result.cut ? ", inconclusive" : ", exhaustive") << ")\n";
  o << "derivable:     " << print_judgment(component.conclusion) << "\n";
  o << "note: " << note << "\n";
  return o.str();
}

ErasingCounterexample demo_erasing_failure() {
  struct Instance {
    const char* gamma;
    const char* term;
    const char* type;
  };
  const Instance schema[] = {
      {"x:A", "x", "A \\/ B"},
      {"x:B -> A, y:B", "x y", "A \\/ C"},
      {"x:A", "\\u.x", "(B -> A) \\/ C"},
  };
  SearchBudget base;
  SearchBudget max = base.doubled().doubled();
  for (const auto& in : schema) {
    Judgment erased = parse_judgment(std::string(in.gamma) + " |- " + in.term +
                                         " : " + in.type + " |",
                                     Language::IU);
    Name a = fresh_name(all_names(erased.term), Name{"a"});
    Judgment muj = erased;
    muj.term = Term::mu(a, a, erased.term);
    SearchResult found = derive(muj, base);
    if (!found || !check_derivation(*found.derivation)) continue;
    SearchResult miss = derive(erased, max);
    if (miss) continue;
    for (const auto& part : union_parts(canonicalize(erased.type))) {
      Judgment cj = erased;
      cj.type = part;
      SearchResult comp = derive(cj, base);
      if (!comp || !check_derivation(*comp.derivation)) continue;
      return ErasingCounterexample{
          *found.derivation, erased, miss, max, *comp.derivation,
          "first confirmed instance of the schema; the particular term is an "
          "artifact choice"};
    }
  }
  throw ConstructionFailure("no erasing counterexample found");
}

}  // namespace lammu
