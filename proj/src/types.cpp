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

#include "lammu/types.hpp"

#include <algorithm>
#include <stdexcept>

namespace lammu {

struct Type::Node {
  Kind kind;
  std::string name;
  std::vector<Type> kids;  // Arrow: {left, right}; Inter/Union: parts
  std::string text;
  std::size_t size = 1;
};

namespace {

// Arrows and non-empty sets inside a set are parenthesized; a nested set of
// either kind keeps its parentheses so the text mirrors the tree.
bool needs_parens_in_set(const Type& part) {
  if (part.is_arrow()) return true;
  if (part.is_var()) return false;
  return !part.parts().empty();
}

std::string render_arrow_left(const Type& l) {
  if (l.is_arrow()) return "(" + l.text() + ")";
  return l.text();
}

std::string render_set(const std::vector<Type>& parts, Type::Kind k) {
  if (parts.empty()) return k == Type::Kind::Inter ? "top" : "bot";
  const char* op = k == Type::Kind::Inter ? " /\\ " : " \\/ ";
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += op;
    if (needs_parens_in_set(parts[i]))
      out += "(" + parts[i].text() + ")";
    else
      out += parts[i].text();
  }
  return out;
}

}  // namespace

const char* language_name(Language l) {
  switch (l) {
    case Language::Curry: return "curry";
    case Language::Strict: return "strict";
    case Language::IU: return "iu";
  }
  return "?";
}

Type Type::var(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Var;
  n->name = std::move(name);
  n->text = n->name;
  return Type(std::move(n));
}

Type Type::arrow(Type left, Type right) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Arrow;
  n->text = render_arrow_left(left) + " -> " + right.text();
  n->size = 1 + left.size() + right.size();
  n->kids = {std::move(left), std::move(right)};
  return Type(std::move(n));
}

Type Type::inter(std::vector<Type> parts) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Inter;
  n->text = render_set(parts, Kind::Inter);
  for (const auto& p : parts) n->size += p.size();
  n->kids = std::move(parts);
  return Type(std::move(n));
}

Type Type::union_of(std::vector<Type> parts) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Union;
  n->text = render_set(parts, Kind::Union);
  for (const auto& p : parts) n->size += p.size();
  n->kids = std::move(parts);
  return Type(std::move(n));
}

Type::Kind Type::kind() const { return node_->kind; }

const std::string& Type::name() const {
  if (!is_var()) throw std::logic_error("Type::name on non-variable");
  return node_->name;
}

const Type& Type::left() const {
  if (!is_arrow()) throw std::logic_error("Type::left on non-arrow");
  return node_->kids[0];
}

const Type& Type::right() const {
  if (!is_arrow()) throw std::logic_error("Type::right on non-arrow");
  return node_->kids[1];
}

const std::vector<Type>& Type::parts() const {
  if (!is_inter() && !is_union())
    throw std::logic_error("Type::parts on non-set type");
  return node_->kids;
}

const std::string& Type::text() const { return node_->text; }
std::size_t Type::size() const { return node_->size; }

bool Type::operator==(const Type& o) const {
  if (node_ == o.node_) return true;
  if (kind() != o.kind() || text() != o.text()) return false;
  if (is_var()) return true;
  const auto& a = node_->kids;
  const auto& b = o.node_->kids;
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i] == b[i])) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Well-formedness

namespace {

bool wf_curry(const Type& t) {
  switch (t.kind()) {
    case Type::Kind::Var: return true;
    case Type::Kind::Arrow:
      return !t.left().is_bottom() && wf_curry(t.left()) && wf_curry(t.right());
    case Type::Kind::Union: return t.parts().empty();
    case Type::Kind::Inter: return false;
  }
  return false;
}

bool wf_strict_s(const Type& t);

// Intersection of strict types (nested intersections allowed; they flatten).
bool wf_strict_i(const Type& t) {
  if (t.is_inter()) {
    for (const auto& p : t.parts())
      if (!wf_strict_i(p)) return false;
    return true;
  }
  return wf_strict_s(t);
}

bool wf_strict_s(const Type& t) {
  switch (t.kind()) {
    case Type::Kind::Var: return true;
    case Type::Kind::Arrow:
      return wf_strict_i(t.left()) && wf_strict_s(t.right());
    default: return false;
  }
}

bool wf_iu_s(const Type& t);

bool wf_iu_i(const Type& t) {
  if (t.is_inter()) {
    for (const auto& p : t.parts())
      if (!wf_iu_i(p)) return false;
    return true;
  }
  return wf_iu_s(t);
}

bool wf_iu_s(const Type& t) {
  switch (t.kind()) {
    case Type::Kind::Var: return true;
    case Type::Kind::Arrow: return wf_iu_i(t.left()) && wf_iu_s(t.right());
    case Type::Kind::Union:
      for (const auto& p : t.parts())
        if (!wf_iu_s(p)) return false;
      return true;
    case Type::Kind::Inter: return false;
  }
  return false;
}

}  // namespace

bool well_formed(const Type& t, Language lang) {
  switch (lang) {
    case Language::Curry: return wf_curry(t);
    case Language::Strict: return wf_strict_i(t);
    case Language::IU: return wf_iu_i(t);
  }
  return false;
}

bool well_formed_left(const LeftEnv& g, Language lang) {
  for (const auto& [x, t] : g)
    if (!well_formed(t, lang)) return false;
  return true;
}

bool well_formed_right(const RightEnv& d, Language lang) {
  for (const auto& [a, t] : d) {
    if (!well_formed(t, lang)) return false;
    if (lang != Language::Curry && t.is_inter()) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Canonical forms

namespace {

std::vector<Type> sorted_unique(std::vector<Type> v) {
  std::sort(v.begin(), v.end(),
            [](const Type& a, const Type& b) { return a.text() < b.text(); });
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

Type build_set(const std::vector<Type>& raw, Type::Kind k) {
  std::vector<Type> flat;
  for (const auto& p : raw) {
    Type c = canonicalize(p);
    if (c.kind() == k)
      flat.insert(flat.end(), c.parts().begin(), c.parts().end());
    else
      flat.push_back(std::move(c));
  }
  flat = sorted_unique(std::move(flat));
  if (flat.size() == 1) return flat.front();
  return k == Type::Kind::Inter ? Type::inter(std::move(flat))
                                : Type::union_of(std::move(flat));
}

}  // namespace

Type canonicalize(const Type& t) {
  switch (t.kind()) {
    case Type::Kind::Var: return t;
    case Type::Kind::Arrow:
      return Type::arrow(canonicalize(t.left()), canonicalize(t.right()));
    case Type::Kind::Inter:
    case Type::Kind::Union: return build_set(t.parts(), t.kind());
  }
  return t;
}

Type make_inter(const std::vector<Type>& parts) {
  return build_set(parts, Type::Kind::Inter);
}

Type make_union(const std::vector<Type>& parts) {
  return build_set(parts, Type::Kind::Union);
}

std::vector<Type> inter_parts(const Type& t) {
  if (t.is_inter()) return t.parts();
  return {t};
}

std::vector<Type> union_parts(const Type& t) {
  if (t.is_union()) return t.parts();
  return {t};
}

LeftEnv canonicalize(const LeftEnv& g) {
  LeftEnv out;
  for (const auto& [x, t] : g) out.emplace(x, canonicalize(t));
  return out;
}

RightEnv canonicalize(const RightEnv& d) {
  RightEnv out;
  for (const auto& [a, t] : d) out.emplace(a, canonicalize(t));
  return out;
}

// ---------------------------------------------------------------------------
// The preorder

namespace {

bool leq(const Type& a, const Type& b);

bool atoms_equiv(const Type& a, const Type& b) {
  if (a.is_var() && b.is_var()) return a.name() == b.name();
  if (a.is_arrow() && b.is_arrow())
    return leq(a.left(), b.left()) && leq(b.left(), a.left()) &&
           leq(a.right(), b.right()) && leq(b.right(), a.right());
  return false;
}

// Whitman's procedure for free lattices; atoms are variables and arrows.
bool leq(const Type& a, const Type& b) {
  if (a.is_union()) {
    for (const auto& p : a.parts())
      if (!leq(p, b)) return false;
    return true;
  }
  if (b.is_inter()) {
    for (const auto& p : b.parts())
      if (!leq(a, p)) return false;
    return true;
  }
  if (!a.is_inter() && !b.is_union()) return atoms_equiv(a, b);
  if (a.is_inter())
    for (const auto& p : a.parts())
      if (leq(p, b)) return true;
  if (b.is_union())
    for (const auto& p : b.parts())
      if (leq(a, p)) return true;
  return false;
}

}  // namespace

bool subtype(const Type& a, const Type& b) { return leq(a, b); }

bool type_equiv(const Type& a, const Type& b) {
  return leq(a, b) && leq(b, a);
}

bool env_leq_left(const LeftEnv& g, const LeftEnv& g2) {
  for (const auto& [x, t2] : g2) {
    auto it = g.find(x);
    if (it == g.end() || !subtype(it->second, t2)) return false;
  }
  return true;
}

bool env_leq_right(const RightEnv& d, const RightEnv& d2) {
  for (const auto& [a, t] : d) {
    auto it = d2.find(a);
    if (it == d2.end() || !subtype(t, it->second)) return false;
  }
  return true;
}

}  // namespace lammu
