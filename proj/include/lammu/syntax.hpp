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

#ifndef LAMMU_SYNTAX_HPP_
#define LAMMU_SYNTAX_HPP_

#include <compare>
#include <cstddef>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace lammu {

// Identifiers live in two disjoint namespaces: term-variables and names
// (context variables). The tag makes a Var and a Name incomparable.
template <class Tag>
struct Ident {
  std::string text;
  auto operator<=>(const Ident&) const = default;
};

struct VarTag {};
struct NameTag {};
using Var = Ident<VarTag>;
using Name = Ident<NameTag>;
using VarSet = std::set<Var>;
using NameSet = std::set<Name>;

// Immutable λμ term. Mu(a, b, M) is the fused node  mu a.[b] M ; the
// pseudo-terms [b]M and mu a.M never exist on their own.
class Term {
 public:
  enum class Kind { Var, Abs, App, Mu };

  static Term var(Var x);
  static Term abs(Var x, Term body);
  static Term app(Term fun, Term arg);
  static Term mu(Name bound, Name named, Term body);

  Kind kind() const;
  bool is_var() const { return kind() == Kind::Var; }
  bool is_abs() const { return kind() == Kind::Abs; }
  bool is_app() const { return kind() == Kind::App; }
  bool is_mu() const { return kind() == Kind::Mu; }

  // Var and Abs.
  const Var& var() const;
  // Abs and Mu.
  const Term& body() const;
  // App.
  const Term& fun() const;
  const Term& arg() const;
  // Mu.
  const Name& bound() const;
  const Name& named() const;

  std::size_t num_children() const;
  const Term& child(std::size_t i) const;
  // Rebuilds this node with a replaced child.
  Term with_child(std::size_t i, Term c) const;

  // Number of nodes.
  std::size_t size() const;

  // Syntactic identity (bound identifiers must match too).
  bool operator==(const Term& o) const;
  bool same_node(const Term& o) const { return node_ == o.node_; }

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// Path of child indices from the root. Abs and Mu bodies are child 0;
// App has fun = 0 and arg = 1.
using Position = std::vector<std::size_t>;

std::string format_position(const Position& p);
bool is_valid_position(const Term& t, const Position& p);
const Term& subterm_at(const Term& t, const Position& p);
Term replace_at(const Term& t, const Position& p, Term replacement);

VarSet free_term_vars(const Term& t);
NameSet free_names(const Term& t);
// Every identifier occurring anywhere (binders included).
VarSet all_term_vars(const Term& t);
NameSet all_names(const Term& t);

bool alpha_eq(const Term& a, const Term& b);

bool is_control_structure(const Term& t);

// hint, hint', hint'', ... : the first candidate not in `avoid`.
std::string fresh(const std::set<std::string>& avoid, const std::string& hint);
Var fresh_var(const VarSet& avoid, const Var& hint);
Name fresh_name(const NameSet& avoid, const Name& hint);

// Alpha-renames every binder of t to an identifier that is distinct from
// every other binder, from the free identifiers of t and from the given
// avoid sets.
Term rename_binders_apart(const Term& t, const VarSet& avoid_vars,
                          const NameSet& avoid_names);

}  // namespace lammu

#endif  // LAMMU_SYNTAX_HPP_
