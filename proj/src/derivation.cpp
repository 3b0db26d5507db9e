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

#include "lammu/derivation.hpp"

#include <algorithm>
#include <stdexcept>

#include "lammu/grammar.hpp"

namespace lammu {

const char* drule_name(DRule r) {
  switch (r) {
    case DRule::InterE: return "InterE";
    case DRule::InterI: return "InterI";
    case DRule::ArrowI: return "ArrowI";
    case DRule::ArrowE: return "ArrowE";
    case DRule::UnionENamed: return "UnionE_named";
    case DRule::UnionESelf: return "UnionE_self";
    case DRule::Thin: return "Thin";
    case DRule::Weaken: return "Weaken";
  }
  return "?";
}

DRule parse_drule(std::string_view s) {
  for (DRule r : {DRule::InterE, DRule::InterI, DRule::ArrowI, DRule::ArrowE,
                  DRule::UnionENamed, DRule::UnionESelf, DRule::Thin,
                  DRule::Weaken})
    if (s == drule_name(r)) return r;
  throw std::invalid_argument("unknown rule '" + std::string(s) + "'");
}

std::size_t Derivation::size() const {
  std::size_t n = 1;
  for (const auto& p : premises) n += p.size();
  return n;
}

std::size_t Derivation::depth() const {
  std::size_t d = 0;
  for (const auto& p : premises) d = std::max(d, p.depth());
  return d + 1;
}

std::string CheckResult::describe() const {
  if (ok) return "valid";
  std::string p = "/";
  for (std::size_t i = 0; i < path.size(); ++i)
    p += (i ? "/" : "") + std::to_string(path[i]);
  return "invalid node " + p + ": " + reason;
}

Derivation make_node(Judgment j, DRule r, std::vector<Derivation> premises,
                     std::size_t index) {
  return Derivation{std::move(j), r, std::move(premises), index};
}

LeftEnv extend(LeftEnv g, const Var& x, const Type& t) {
  g.insert_or_assign(x, t);
  return g;
}

RightEnv extend(RightEnv d, const Name& a, const Type& t) {
  d.insert_or_assign(a, t);
  return d;
}

namespace {

template <class Env>
bool env_eq(const Env& a, const Env& b) {
  if (a.size() != b.size()) return false;
  auto i = a.begin();
  auto j = b.begin();
  for (; i != a.end(); ++i, ++j)
    if (!(i->first == j->first) ||
        !(canonicalize(i->second) == canonicalize(j->second)))
      return false;
  return true;
}

}  // namespace

bool env_equal(const LeftEnv& a, const LeftEnv& b) { return env_eq(a, b); }
bool env_equal(const RightEnv& a, const RightEnv& b) { return env_eq(a, b); }

LeftEnv restrict_to(const LeftEnv& g, const VarSet& xs) {
  LeftEnv out;
  for (const auto& [x, t] : g)
    if (xs.count(x)) out.emplace(x, t);
  return out;
}

RightEnv restrict_to(const RightEnv& d, const NameSet& as) {
  RightEnv out;
  for (const auto& [a, t] : d)
    if (as.count(a)) out.emplace(a, t);
  return out;
}

namespace {

struct Checker {
  std::vector<std::size_t> path;
  std::string reason;

  bool fail(std::string r) {
    reason = std::move(r);
    return false;
  }

  bool same_subject(const Judgment& a, const Judgment& b) {
    return a.term == b.term;
  }

  bool teq(const Type& a, const Type& b) {
    return canonicalize(a) == canonicalize(b);
  }

  bool well_formed_judgment(const Judgment& j) {
    if (!well_formed(j.type, Language::IU))
      return fail("type '" + j.type.text() + "' is not an iu type");
    for (const auto& [x, t] : j.gamma)
      if (!well_formed(t, Language::IU))
        return fail("left environment type for '" + x.text +
                    "' is not an iu type");
    for (const auto& [a, t] : j.delta)
      if (!well_formed(t, Language::IU) || canonicalize(t).is_inter())
        return fail("right environment type for '" + a.text +
                    "' is not a strict iu type");
    return true;
  }

  bool premise_count(const Derivation& d, std::size_t n) {
    if (d.premises.size() != n)
      return fail(std::string(drule_name(d.rule)) + " expects " +
                  std::to_string(n) + " premise(s), found " +
                  std::to_string(d.premises.size()));
    return true;
  }

  bool node(const Derivation& d) {
    const Judgment& c = d.conclusion;
    if (!well_formed_judgment(c)) return false;
    const Term& m = c.term;
    Type a = canonicalize(c.type);
    switch (d.rule) {
      case DRule::InterE: {
        if (!m.is_var()) return fail("InterE needs a variable subject");
        if (!premise_count(d, 0)) return false;
        auto it = c.gamma.find(m.var());
        if (it == c.gamma.end())
          return fail("'" + m.var().text + "' is not in the left environment");
        auto parts = inter_parts(canonicalize(it->second));
        if (d.index >= parts.size())
          return fail("InterE index " + std::to_string(d.index) +
                      " out of range for '" + it->second.text() + "'");
        if (!(parts[d.index] == a))
          return fail("InterE component '" + parts[d.index].text() +
                      "' differs from '" + a.text() + "'");
        return true;
      }
      case DRule::InterI: {
        if (!a.is_inter())
          return fail("InterI needs n >= 0, n != 1 components, conclusion '" +
                      a.text() + "' is not an intersection");
        if (!premise_count(d, a.parts().size())) return false;
        std::vector<std::string> want, got;
        for (const auto& p : a.parts()) want.push_back(p.text());
        for (const auto& p : d.premises) {
          const Judgment& pj = p.conclusion;
          if (!same_subject(pj, c) || !env_equal(pj.gamma, c.gamma) ||
              !env_equal(pj.delta, c.delta))
            return fail("InterI premises must share environments and subject");
          got.push_back(canonicalize(pj.type).text());
        }
        std::sort(got.begin(), got.end());
        if (got != want)
          return fail("InterI premise types do not match the components");
        return true;
      }
      case DRule::ArrowI: {
        if (!m.is_abs()) return fail("ArrowI needs an abstraction subject");
        if (!a.is_arrow())
          return fail("ArrowI conclusion '" + a.text() + "' is not an arrow");
        if (!premise_count(d, 1)) return false;
        const Judgment& pj = d.premises[0].conclusion;
        if (!(pj.term == m.body()))
          return fail("ArrowI premise subject is not the body");
        if (!env_equal(pj.gamma, extend(c.gamma, m.var(), a.left())))
          return fail("ArrowI premise left environment must add '" +
                      m.var().text + ":" + a.left().text() + "'");
        if (!env_equal(pj.delta, c.delta))
          return fail("ArrowI premise right environment differs");
        if (!teq(pj.type, a.right()))
          return fail("ArrowI premise type differs from the codomain");
        return true;
      }
      case DRule::ArrowE: {
        if (!m.is_app()) return fail("ArrowE needs an application subject");
        if (d.premises.size() < 2)
          return fail("ArrowE needs n >= 1 argument premises");
        const Judgment& fj = d.premises[0].conclusion;
        if (!(fj.term == m.fun()) || !env_equal(fj.gamma, c.gamma) ||
            !env_equal(fj.delta, c.delta))
          return fail("ArrowE function premise does not match");
        auto arrows = union_parts(canonicalize(fj.type));
        if (arrows.size() != d.premises.size() - 1)
          return fail("ArrowE function type '" + fj.type.text() + "' has " +
                      std::to_string(arrows.size()) + " components but " +
                      std::to_string(d.premises.size() - 1) +
                      " argument premises were given");
        std::vector<Type> rights;
        for (std::size_t i = 0; i < arrows.size(); ++i) {
          if (!arrows[i].is_arrow())
            return fail("ArrowE function type component '" +
                        arrows[i].text() + "' is not an arrow");
          const Judgment& aj = d.premises[i + 1].conclusion;
          if (!(aj.term == m.arg()) || !env_equal(aj.gamma, c.gamma) ||
              !env_equal(aj.delta, c.delta))
            return fail("ArrowE argument premise does not match");
          if (!teq(aj.type, arrows[i].left()))
            return fail("ArrowE argument premise " + std::to_string(i + 1) +
                        " must have type '" + arrows[i].left().text() + "'");
          rights.push_back(arrows[i].right());
        }
        if (!(make_union(rights) == a))
          return fail("ArrowE conclusion must be '" +
                      make_union(rights).text() + "'");
        return true;
      }
      case DRule::UnionENamed:
      case DRule::UnionESelf: {
        if (!m.is_mu()) return fail("UnionE needs a mu subject");
        bool self = m.bound() == m.named();
        if (self != (d.rule == DRule::UnionESelf))
          return fail(self ? "self-named mu needs UnionE_self"
                           : "UnionE_self needs a self-named mu");
        if (a.is_inter())
          return fail("UnionE conclusion '" + a.text() + "' is not strict");
        if (!premise_count(d, 1)) return false;
        const Judgment& pj = d.premises[0].conclusion;
        if (!(pj.term == m.body()))
          return fail("UnionE premise subject is not the body");
        if (!env_equal(pj.gamma, c.gamma))
          return fail("UnionE premise left environment differs");
        if (!env_equal(pj.delta, extend(c.delta, m.bound(), a)))
          return fail("UnionE premise right environment must bind '" +
                      m.bound().text + ":" + a.text() + "'");
        Type b = canonicalize(pj.type);
        if (b.is_inter())
          return fail("UnionE premise type '" + b.text() + "' is not strict");
        Type bound_type = a;
        if (!self) {
          auto it = c.delta.find(m.named());
          if (it == c.delta.end())
            return fail("name '" + m.named().text +
                        "' is not in the right environment");
          bound_type = canonicalize(it->second);
        }
        if (!subtype(b, bound_type))
          return fail("UnionE side condition '" + b.text() + " <= " +
                      bound_type.text() + "' fails");
        return true;
      }
      case DRule::Thin: {
        if (!premise_count(d, 1)) return false;
        const Judgment& pj = d.premises[0].conclusion;
        if (!same_subject(pj, c) || !teq(pj.type, a))
          return fail("Thin must keep subject and type");
        if (!env_equal(c.gamma, restrict_to(pj.gamma, free_term_vars(m))) ||
            !env_equal(c.delta, restrict_to(pj.delta, free_names(m))))
          return fail("Thin must restrict to the free identifiers");
        return true;
      }
      case DRule::Weaken: {
        if (!premise_count(d, 1)) return false;
        const Judgment& pj = d.premises[0].conclusion;
        if (!same_subject(pj, c) || !teq(pj.type, a))
          return fail("Weaken must keep subject and type");
        if (!env_leq_left(canonicalize(c.gamma), canonicalize(pj.gamma)))
          return fail("Weaken needs the new left environment below the old");
        if (!env_leq_right(canonicalize(pj.delta), canonicalize(c.delta)))
          return fail("Weaken needs the old right environment below the new");
        return true;
      }
    }
    return fail("unknown rule");
  }

  bool walk(const Derivation& d) {
    if (!node(d)) return false;
    for (std::size_t i = 0; i < d.premises.size(); ++i) {
      path.push_back(i);
      if (!walk(d.premises[i])) return false;
      path.pop_back();
    }
    return true;
  }
};

void render(const Derivation& d, std::size_t indent, std::string& out) {
  out += std::string(indent, ' ') + drule_name(d.rule);
  if (d.rule == DRule::InterE) out += "[" + std::to_string(d.index) + "]";
  out += "  " + print_judgment(d.conclusion) + "\n";
  for (const auto& p : d.premises) render(p, indent + 2, out);
}

}  // namespace

CheckResult check_derivation(const Derivation& d) {
  Checker c;
  if (c.walk(d)) return {};
  return CheckResult{false, c.path, c.reason};
}

std::string render_derivation(const Derivation& d) {
  std::string out;
  render(d, 0, out);
  return out;
}

}  // namespace lammu
