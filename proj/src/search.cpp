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

#include "lammu/search.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <unordered_map>

#include "lammu/grammar.hpp"

namespace lammu {

bool is_var_headed(const Term& m) {
  const Term* t = &m;
  while (t->is_app()) t = &t->fun();
  return t->is_var();
}

namespace {

std::string key_of(const LeftEnv& g, const Term& m, const Type& a,
                   const RightEnv& d) {
  return print_left_env(g) + " |- " + print_term(m) + " : " + a.text() +
         " | " + print_right_env(d);
}

bool has_union(const Type& t) {
  if (t.is_union()) return true;
  if (t.is_arrow()) return has_union(t.left()) || has_union(t.right());
  if (t.is_inter())
    for (const auto& p : t.parts())
      if (has_union(p)) return true;
  return false;
}

void subterms(const Type& t, std::vector<Type>& out) {
  out.push_back(t);
  if (t.is_arrow()) {
    subterms(t.left(), out);
    subterms(t.right(), out);
  } else if (!t.is_var()) {
    for (const auto& p : t.parts()) subterms(p, out);
  }
}

// Set partitions of {0..k-1} into at most `blocks` blocks, fewest first.
std::vector<std::vector<std::vector<std::size_t>>> partitions(
    std::size_t k, std::size_t blocks) {
  std::vector<std::vector<std::vector<std::size_t>>> out;
  std::vector<std::size_t> rgs(k, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i,
                                                          std::size_t used) {
    if (i == k) {
      std::vector<std::vector<std::size_t>> p(used);
      for (std::size_t j = 0; j < k; ++j) p[rgs[j]].push_back(j);
      out.push_back(std::move(p));
      return;
    }
    for (std::size_t b = 0; b <= used && b < blocks; ++b) {
      rgs[i] = b;
      rec(i + 1, std::max(used, b + 1));
    }
  };
  if (k > 0) rec(0, 0);
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() < b.size();
  });
  return out;
}

class Searcher {
 public:
  Searcher(const SearchBudget& b, bool strict, std::vector<Type> universe)
      : b_(b), strict_(strict), universe_(std::move(universe)) {}

  bool cut = false;
  std::size_t steps = 0;

  std::optional<Derivation> prove(const LeftEnv& g, const Term& m,
                                  const Type& a0, const RightEnv& d,
                                  std::size_t depth) {
    Type a = canonicalize(a0);
    if (depth == 0 || ++steps > b_.max_steps) {
      cut = true;
      return std::nullopt;
    }
    std::string key = key_of(g, m, a, d);
    auto it = memo_.find(key);
    if (it != memo_.end()) {
      const Memo& e = it->second;
      if (e.found && e.found->depth() <= depth) return e.found;
      if (e.failed && !e.failed_cut) return std::nullopt;
      if (e.failed && depth <= e.failed_depth) {
        cut = true;
        return std::nullopt;
      }
    }
    bool saved = cut;
    cut = false;
    std::optional<Derivation> r = prove_impl(g, m, a, d, depth);
    bool local = cut;
    cut = saved || local;
    Memo& e = memo_[key];
    if (r) {
      e.found = r;
    } else if (!e.failed || depth >= e.failed_depth) {
      e.failed = true;
      e.failed_depth = depth;
      e.failed_cut = local;
    }
    return r;
  }

  std::vector<Derivation> synth(const LeftEnv& g, const Term& m,
                                const RightEnv& d, std::size_t depth) {
    if (depth == 0 || ++steps > b_.max_steps) {
      cut = true;
      return {};
    }
    std::string key = key_of(g, m, Type::top(), d) + "#" + std::to_string(depth);
    auto it = synth_memo_.find(key);
    if (it != synth_memo_.end()) {
      cut = cut || it->second.second;
      return it->second.first;
    }
    bool saved = cut;
    cut = false;
    std::vector<Derivation> out;
    if (m.is_var()) {
      auto gi = g.find(m.var());
      if (gi != g.end()) {
        auto parts = inter_parts(canonicalize(gi->second));
        for (std::size_t i = 0; i < parts.size(); ++i)
          out.push_back(make_node(Judgment{g, m, parts[i], d}, DRule::InterE,
                                  {}, i));
      }
    } else if (m.is_app()) {
      std::set<std::string> seen;
      for (const Derivation& f : synth(g, m.fun(), d, depth - 1)) {
        auto arrows = union_parts(canonicalize(f.conclusion.type));
        if (arrows.empty()) continue;
        if (strict_ && arrows.size() != 1) continue;
        bool ok = std::all_of(arrows.begin(), arrows.end(),
                              [](const Type& t) { return t.is_arrow(); });
        if (!ok) continue;
        std::vector<Derivation> prem{f};
        std::vector<Type> rights;
        for (const auto& ar : arrows) {
          auto pa = prove(g, m.arg(), ar.left(), d, depth - 1);
          if (!pa) {
            ok = false;
            break;
          }
          prem.push_back(std::move(*pa));
          rights.push_back(ar.right());
        }
        if (!ok) continue;
        Type t = make_union(rights);
        if (!seen.insert(t.text()).second) continue;
        out.push_back(make_node(Judgment{g, m, t, d}, DRule::ArrowE,
                                std::move(prem)));
      }
    }
    bool local = cut;
    cut = saved || local;
    synth_memo_.emplace(key, std::make_pair(out, local));
    return out;
  }

 private:
  struct Memo {
    std::optional<Derivation> found;
    bool failed = false;
    std::size_t failed_depth = 0;
    bool failed_cut = false;
  };

  std::optional<Derivation> prove_impl(const LeftEnv& g, const Term& m,
                                       const Type& a, const RightEnv& d,
                                       std::size_t depth) {
    Judgment c{g, m, a, d};
    if (a.is_inter()) {
      std::vector<Derivation> prem;
      for (const auto& p : a.parts()) {
        auto r = prove(g, m, p, d, depth - 1);
        if (!r) return std::nullopt;
        prem.push_back(std::move(*r));
      }
      return make_node(std::move(c), DRule::InterI, std::move(prem));
    }
    switch (m.kind()) {
      case Term::Kind::Var: {
        auto it = g.find(m.var());
        if (it == g.end()) return std::nullopt;
        auto parts = inter_parts(canonicalize(it->second));
        for (std::size_t i = 0; i < parts.size(); ++i)
          if (parts[i] == a) return make_node(std::move(c), DRule::InterE, {}, i);
        return std::nullopt;
      }
      case Term::Kind::Abs: {
        if (!a.is_arrow()) return std::nullopt;
        auto r = prove(extend(g, m.var(), a.left()), m.body(), a.right(), d,
                       depth - 1);
        if (!r) return std::nullopt;
        return make_node(std::move(c), DRule::ArrowI, {std::move(*r)});
      }
      case Term::Kind::App: return prove_app(c, depth);
      case Term::Kind::Mu:
        if (strict_) return std::nullopt;
        return prove_mu(c, depth);
    }
    return std::nullopt;
  }

  // Types C with |- Q : C, in trial order.
  std::vector<Type> arg_witnesses(const LeftEnv& g, const Term& q,
                                  const RightEnv& d, std::size_t depth) {
    std::vector<Type> cands{Type::top()};
    if (is_var_headed(q))
      for (const auto& s : synth(g, q, d, depth))
        cands.push_back(canonicalize(s.conclusion.type));
    cands.insert(cands.end(), universe_.begin(), universe_.end());
    std::vector<Type> out;
    std::set<std::string> seen;
    for (const auto& t : cands) {
      if (!seen.insert(t.text()).second) continue;
      if (strict_ && (has_union(t) || t.is_bottom())) continue;
      if (prove(g, q, t, d, depth)) out.push_back(t);
    }
    return out;
  }

  std::optional<Derivation> prove_app(const Judgment& c, std::size_t depth) {
    const Term& m = c.term;
    const Type& a = c.type;
    const LeftEnv& g = c.gamma;
    const RightEnv& d = c.delta;
    if (is_var_headed(m)) {
      for (const Derivation& s : synth(g, m, d, depth))
        if (canonicalize(s.conclusion.type) == a) return s;
      return std::nullopt;
    }
    // Result groups B_1..B_n whose union is the goal.
    std::vector<std::vector<Type>> groupings;
    auto parts = union_parts(a);
    if (strict_ || parts.empty() || m.fun().is_abs()) {
      groupings.push_back({a});
    } else {
      for (const auto& p : partitions(parts.size(), b_.width)) {
        std::vector<Type> gs;
        for (const auto& block : p) {
          std::vector<Type> bt;
          for (auto i : block) bt.push_back(parts[i]);
          gs.push_back(make_union(bt));
        }
        groupings.push_back(std::move(gs));
      }
    }
    std::vector<Type> ws = arg_witnesses(g, m.arg(), d, depth - 1);
    for (const auto& gs : groupings) {
      std::size_t n = gs.size();
      std::vector<Type> pool = ws;
      if (n > 1 && pool.size() > 16) pool.erase(pool.begin() + 16, pool.end());
      if (pool.empty()) break;
      std::vector<std::size_t> idx(n, 0);
      for (;;) {
        std::vector<Type> arrows;
        for (std::size_t i = 0; i < n; ++i)
          arrows.push_back(Type::arrow(pool[idx[i]], gs[i]));
        Type ft = make_union(arrows);
        if (union_parts(ft).size() == n) {
          auto fp = prove(g, m.fun(), ft, d, depth - 1);
          if (fp) {
            std::vector<Derivation> prem{std::move(*fp)};
            bool ok = true;
            for (const auto& ar : union_parts(ft)) {
              auto ap = prove(g, m.arg(), ar.left(), d, depth - 1);
              if (!ap) {
                ok = false;
                break;
              }
              prem.push_back(std::move(*ap));
            }
            if (ok) return make_node(c, DRule::ArrowE, std::move(prem));
          }
        }
        std::size_t k = 0;
        while (k < n && ++idx[k] == pool.size()) idx[k++] = 0;
        if (k == n) break;
      }
    }
    cut = true;
    return std::nullopt;
  }

  std::optional<Derivation> prove_mu(const Judgment& c, std::size_t depth) {
    const Term& m = c.term;
    const Type& a = c.type;
    bool self = m.bound() == m.named();
    Type target = a;
    if (!self) {
      auto it = c.delta.find(m.named());
      if (it == c.delta.end()) return std::nullopt;
      target = canonicalize(it->second);
    }
    RightEnv d2 = extend(c.delta, m.bound(), a);
    DRule rule = self ? DRule::UnionESelf : DRule::UnionENamed;
    const Term& body = m.body();
    if (is_var_headed(body)) {
      for (const Derivation& s : synth(c.gamma, body, d2, depth - 1)) {
        Type t = canonicalize(s.conclusion.type);
        if (!t.is_inter() && subtype(t, target))
          return make_node(c, rule, {s});
      }
      return std::nullopt;
    }
    auto parts = union_parts(target);
    if (body.is_abs()) {
      for (const auto& p : parts) {
        if (!p.is_arrow()) continue;
        if (auto r = prove(c.gamma, body, p, d2, depth - 1))
          return make_node(c, rule, {std::move(*r)});
      }
      return std::nullopt;
    }
    std::vector<Type> cands;
    if (!parts.empty()) cands.push_back(target);
    if (parts.size() > 1)
      for (const auto& p : parts) cands.push_back(p);
    if (parts.size() > 2 && parts.size() <= 6) {
      for (std::size_t mask = 1; mask + 1 < (1u << parts.size()); ++mask) {
        if (__builtin_popcount(mask) < 2) continue;
        std::vector<Type> sub;
        for (std::size_t i = 0; i < parts.size(); ++i)
          if (mask & (1u << i)) sub.push_back(parts[i]);
        cands.push_back(make_union(sub));
      }
    }
    for (const auto& u : universe_)
      if (!u.is_inter() && !u.is_bottom() && subtype(u, target))
        cands.push_back(u);
    cands.push_back(Type::bottom());
    std::set<std::string> seen;
    for (const auto& t : cands) {
      if (!seen.insert(t.text()).second) continue;
      if (auto r = prove(c.gamma, body, t, d2, depth - 1))
        return make_node(c, rule, {std::move(*r)});
    }
    cut = true;
    return std::nullopt;
  }

  SearchBudget b_;
  bool strict_;
  std::vector<Type> universe_;
  std::unordered_map<std::string, Memo> memo_;
  std::unordered_map<std::string, std::pair<std::vector<Derivation>, bool>>
      synth_memo_;
};

bool contains_mu(const Term& m) {
  if (m.is_mu()) return true;
  for (std::size_t i = 0; i < m.num_children(); ++i)
    if (contains_mu(m.child(i))) return true;
  return false;
}

}  // namespace

std::vector<Type> witness_universe(const Judgment& j,
                                   const SearchBudget& budget,
                                   bool strict_only) {
  std::vector<Type> all;
  subterms(canonicalize(j.type), all);
  for (const auto& [x, t] : j.gamma) subterms(canonicalize(t), all);
  for (const auto& [a, t] : j.delta) subterms(canonicalize(t), all);
  std::vector<Type> strict, inters;
  std::set<std::string> seen{"top", "bot"};
  for (const auto& t : all) {
    if (t.size() > budget.type_size) continue;
    if (strict_only && has_union(t)) continue;
    if (!seen.insert(t.text()).second) continue;
    (t.is_inter() ? inters : strict).push_back(t);
  }
  auto by_size = [](const Type& a, const Type& b) {
    return a.size() != b.size() ? a.size() < b.size() : a.text() < b.text();
  };
  std::sort(strict.begin(), strict.end(), by_size);
  std::sort(inters.begin(), inters.end(), by_size);
  std::vector<Type> out{Type::top()};
  out.insert(out.end(), strict.begin(), strict.end());
  // Intersections of 2..width strict members, capped.
  constexpr std::size_t kMaxCombos = 400;
  std::size_t combos = 0;
  std::vector<std::size_t> pick;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (combos >= kMaxCombos) return;
    if (pick.size() >= 2) {
      std::vector<Type> ps;
      for (auto i : pick) ps.push_back(strict[i]);
      Type t = make_inter(ps);
      if (seen.insert(t.text()).second) {
        out.push_back(t);
        ++combos;
      }
    }
    if (pick.size() == budget.width) return;
    for (std::size_t i = from; i < strict.size(); ++i) {
      pick.push_back(i);
      rec(i + 1);
      pick.pop_back();
    }
  };
  rec(0);
  out.insert(out.end(), inters.begin(), inters.end());
  if (!strict_only) out.push_back(Type::bottom());
  return out;
}

SearchResult derive(const Judgment& j, const SearchBudget& budget) {
  Searcher s(budget, false, witness_universe(j, budget));
  SearchResult r;
  r.derivation = s.prove(j.gamma, j.term, j.type, j.delta, budget.depth);
  r.cut = s.cut;
  r.steps = s.steps;
  return r;
}

SearchResult check_strict(const LeftEnv& gamma, const Term& m, const Type& a,
                          const SearchBudget& budget) {
  if (contains_mu(m))
    throw NotPureLambda("check_strict needs a pure lambda-term, got " +
                        print_term(m));
  Judgment j{gamma, m, a, {}};
  Searcher s(budget, true, witness_universe(j, budget, true));
  SearchResult r;
  r.derivation = s.prove(gamma, m, a, {}, budget.depth);
  r.cut = s.cut;
  r.steps = s.steps;
  return r;
}

std::vector<Derivation> synth(const LeftEnv& gamma, const Term& m,
                              const RightEnv& delta,
                              const SearchBudget& budget) {
  if (!is_var_headed(m)) return {};
  Judgment j{gamma, m, Type::top(), delta};
  Searcher s(budget, false, witness_universe(j, budget));
  return s.synth(gamma, m, delta, budget.depth);
}

std::vector<InversionCandidate> invert(const Judgment& j) {
  Type a = canonicalize(j.type);
  std::vector<InversionCandidate> out;
  const Term& m = j.term;
  if (a.is_inter()) {
    InversionCandidate c{DRule::InterI, {}, "n = " +
                                            std::to_string(a.parts().size()) +
                                            " components, n != 1"};
    for (const auto& p : a.parts())
      c.premises.push_back(Judgment{j.gamma, m, p, j.delta});
    out.push_back(std::move(c));
  } else {
    switch (m.kind()) {
      case Term::Kind::Var: {
        auto it = j.gamma.find(m.var());
        if (it != j.gamma.end() && subtype(it->second, a))
          out.push_back({DRule::InterE, {},
                         m.var().text + ":" + it->second.text() +
                             " in G with " + it->second.text() +
                             " <= " + a.text()});
        break;
      }
      case Term::Kind::Abs:
        if (a.is_arrow())
          out.push_back({DRule::ArrowI,
                         {Judgment{extend(j.gamma, m.var(), a.left()),
                                   m.body(), a.right(), j.delta}},
                         ""});
        break;
      case Term::Kind::App: {
        auto parts = union_parts(a);
        if (parts.empty()) parts.push_back(a);
        std::vector<Type> arrows;
        InversionCandidate c{DRule::ArrowE, {}, ""};
        for (std::size_t i = 0; i < parts.size(); ++i) {
          Type w = Type::var("?B" + std::to_string(i + 1));
          arrows.push_back(Type::arrow(w, parts[i]));
        }
        c.premises.push_back(
            Judgment{j.gamma, m.fun(), Type::union_of(arrows), j.delta});
        for (const auto& ar : arrows)
          c.premises.push_back(Judgment{j.gamma, m.arg(), ar.left(), j.delta});
        c.side = "n >= 1; the union of the codomains is " + a.text();
        out.push_back(std::move(c));
        break;
      }
      case Term::Kind::Mu: {
        bool self = m.bound() == m.named();
        Type target = a;
        if (!self) {
          auto it = j.delta.find(m.named());
          if (it == j.delta.end()) break;
          target = it->second;
        }
        out.push_back({self ? DRule::UnionESelf : DRule::UnionENamed,
                       {Judgment{j.gamma, m.body(), Type::var("?B1"),
                                 extend(j.delta, m.bound(), a)}},
                       "?B1 <= " + target.text()});
        break;
      }
    }
  }
  if (out.empty())
    throw EmptyInversion("no rule concludes " + print_judgment(j));
  return out;
}

}  // namespace lammu
