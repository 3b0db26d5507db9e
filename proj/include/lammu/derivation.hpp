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

#ifndef LAMMU_DERIVATION_HPP_
#define LAMMU_DERIVATION_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "lammu/judgment.hpp"

namespace lammu {

// Rules of the intersection-union system. Thin and Weaken are the
// admissible rules (T) and (W), kept as explicit nodes.
enum class DRule {
  InterE,
  InterI,
  ArrowI,
  ArrowE,
  UnionENamed,
  UnionESelf,
  Thin,
  Weaken
};

const char* drule_name(DRule r);
// Throws std::invalid_argument.
DRule parse_drule(std::string_view s);

struct Derivation {
  Judgment conclusion;
  DRule rule;
  std::vector<Derivation> premises;
  // InterE: which component of G(x) is projected (0-based, canonical order).
  std::size_t index = 0;

  std::size_t size() const;
  std::size_t depth() const;
};

// Result of checking a derivation. `path` lists premise indices from the
// root to the first failing node.
struct CheckResult {
  bool ok = true;
  std::vector<std::size_t> path;
  std::string reason;

  explicit operator bool() const { return ok; }
  std::string describe() const;
};

CheckResult check_derivation(const Derivation& d);

// Convenience constructors that compute nothing; the checker decides.
Derivation make_node(Judgment j, DRule r, std::vector<Derivation> premises,
                     std::size_t index = 0);

// Tree rendering, one node per line, premises indented.
std::string render_derivation(const Derivation& d);

// Environment helpers shared by the checker and the transformers.
LeftEnv extend(LeftEnv g, const Var& x, const Type& t);
RightEnv extend(RightEnv d, const Name& a, const Type& t);
bool env_equal(const LeftEnv& a, const LeftEnv& b);
bool env_equal(const RightEnv& a, const RightEnv& b);
LeftEnv restrict_to(const LeftEnv& g, const VarSet& xs);
RightEnv restrict_to(const RightEnv& d, const NameSet& as);

}  // namespace lammu

#endif  // LAMMU_DERIVATION_HPP_
