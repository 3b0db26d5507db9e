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

#ifndef LAMMU_TYPES_HPP_
#define LAMMU_TYPES_HPP_

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "lammu/syntax.hpp"

namespace lammu {

enum class Language { Curry, Strict, IU };

const char* language_name(Language l);

// One representation for the three type languages. Top is the empty
// intersection and Bottom the empty union; Curry's bottom constant shares the
// Bottom constructor and is told apart only by well_formed.
class Type {
 public:
  enum class Kind { Var, Arrow, Inter, Union };

  static Type var(std::string name);
  static Type arrow(Type left, Type right);
  static Type inter(std::vector<Type> parts);
  static Type union_of(std::vector<Type> parts);
  static Type top() { return inter({}); }
  static Type bottom() { return union_of({}); }

  Kind kind() const;
  bool is_var() const { return kind() == Kind::Var; }
  bool is_arrow() const { return kind() == Kind::Arrow; }
  bool is_inter() const { return kind() == Kind::Inter; }
  bool is_union() const { return kind() == Kind::Union; }
  bool is_top() const { return is_inter() && parts().empty(); }
  bool is_bottom() const { return is_union() && parts().empty(); }
  // Strict in the iu sense: anything but a top-level intersection.
  bool is_strict() const { return !is_inter(); }

  const std::string& name() const;
  const Type& left() const;
  const Type& right() const;
  const std::vector<Type>& parts() const;

  // ASCII surface form with minimal parentheses; also the sort key of
  // canonical forms.
  const std::string& text() const;
  std::size_t size() const;

  bool operator==(const Type& o) const;
  bool operator<(const Type& o) const { return text() < o.text(); }

 private:
  struct Node;
  explicit Type(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

bool well_formed(const Type& t, Language lang);

// Flattens nested intersections/unions, canonicalizes children, sorts parts
// by printed form, drops duplicate parts and unwraps singletons. Absorption
// (A /\ (A \/ B) ~ A) is deliberately not applied: intersections on the left
// are read as lists of assumptions by the exact projection rule.
Type canonicalize(const Type& t);

// Canonical intersection/union of the given parts.
Type make_inter(const std::vector<Type>& parts);
Type make_union(const std::vector<Type>& parts);

// The components of a (possibly singleton) intersection or union.
std::vector<Type> inter_parts(const Type& t);
std::vector<Type> union_parts(const Type& t);

// A <= B in the least preorder generated by intersection projection and
// introduction, union injection and elimination, with arrows compared by ~.
bool subtype(const Type& a, const Type& b);
bool type_equiv(const Type& a, const Type& b);

using LeftEnv = std::map<Var, Type>;
using RightEnv = std::map<Name, Type>;

// G <= G' iff every x:A' in G' has x:A in G with A <= A'.
bool env_leq_left(const LeftEnv& g, const LeftEnv& g2);
// D <= D' iff every a:A in D has a:A' in D' with A <= A'.
bool env_leq_right(const RightEnv& d, const RightEnv& d2);

bool well_formed_left(const LeftEnv& g, Language lang);
bool well_formed_right(const RightEnv& d, Language lang);

LeftEnv canonicalize(const LeftEnv& g);
RightEnv canonicalize(const RightEnv& d);

}  // namespace lammu

#endif  // LAMMU_TYPES_HPP_
