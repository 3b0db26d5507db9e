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

#ifndef LAMMU_SIMPLE_TYPES_HPP_
#define LAMMU_SIMPLE_TYPES_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lammu/derivation.hpp"
#include "lammu/judgment.hpp"

namespace lammu {

// Rules of the simple lambda-mu system. Mu covers both the named and the
// self-named variant.
enum class SRule { Ax, ArrowI, ArrowE, Mu };

const char* srule_name(SRule r);
SRule parse_srule(std::string_view s);

struct SimpleDerivation {
  Judgment conclusion;
  SRule rule;
  std::vector<SimpleDerivation> premises;

  std::size_t size() const;
};

struct SimpleFailure {
  SRule rule;
  // The judgment at the failing node; unsolved types print as ?n.
  std::string judgment;
  std::string reason;
};

struct SimpleCheck {
  std::optional<SimpleDerivation> derivation;
  std::optional<SimpleFailure> failure;

  explicit operator bool() const { return derivation.has_value(); }
};

// Checks a curry judgment; on success returns the full derivation.
SimpleCheck check_simple(const Judgment& j);

// Node-by-node verification of a given simple derivation.
CheckResult check_simple_derivation(const SimpleDerivation& d);

struct SimpleTyping {
  LeftEnv gamma;
  Type type;
  RightEnv delta;
};

struct UntypableReport {
  std::string kind;  // "clash", "occurs" or "bottom"
  std::string left;
  std::string right;
  std::string detail;
};

struct InferResult {
  std::optional<SimpleTyping> typing;
  std::optional<UntypableReport> report;

  explicit operator bool() const { return typing.has_value(); }
};

// Principal simple typing; type variables are named A, B, C, ... in order of
// first appearance (type, then left environment, then right environment).
InferResult infer_simple(const Term& m);

// Reads a simple derivation in the intersection-union system, with (->E)
// taken at n = 1.
Derivation embed_simple(const SimpleDerivation& d);

std::string render_simple_derivation(const SimpleDerivation& d);

}  // namespace lammu

#endif  // LAMMU_SIMPLE_TYPES_HPP_
