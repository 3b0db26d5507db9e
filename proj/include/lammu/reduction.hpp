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

#ifndef LAMMU_REDUCTION_HPP_
#define LAMMU_REDUCTION_HPP_

#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lammu/syntax.hpp"

namespace lammu {

// beta and mu are the computational rules; the rest are simplifications.
enum class Rule { Beta, Mu, Renaming, Erasing, EtaMu };
using RuleSet = std::set<Rule>;

const char* rule_name(Rule r);
// Accepts beta, mu, renaming, erasing, eta_mu; throws std::invalid_argument.
Rule parse_rule(std::string_view s);
// Comma-separated list.
RuleSet parse_rule_set(std::string_view s);

class FreshnessViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotARedex : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// M[N/x], capture-avoiding.
Term subst_term(const Term& m, const Var& x, const Term& n);

// M[N.g/a]: every subterm named a becomes the same subterm applied to N and
// named g. Requires g not free in M or N and g != a.
Term subst_structural(const Term& m, const Name& a, const Term& n,
                      const Name& g);

// M[b/g]: every free [g] becomes [b], capture-avoiding with respect to b.
Term rename_name(const Term& m, const Name& g, const Name& b);

struct Redex {
  Position pos;
  Rule rule;
  bool operator==(const Redex&) const = default;
};

// Leftmost-outermost (pre-order) list of the enabled redexes.
std::vector<Redex> redexes(const Term& m, const RuleSet& enabled);

// Whether `rule` applies at the root of m.
bool is_redex(const Term& m, Rule rule);

// Contracts the redex at `at`; throws NotARedex otherwise.
Term step(const Term& m, const Position& at, Rule rule);

struct TraceStep {
  Position pos;
  Rule rule;
  Term result;
};

struct ReductionTrace {
  Term initial;
  std::vector<TraceStep> steps;
  bool fuel_exhausted = false;

  const Term& final_term() const {
    return steps.empty() ? initial : steps.back().result;
  }
};

// Repeatedly contracts the leftmost-outermost enabled redex.
ReductionTrace normalize(const Term& m, const RuleSet& enabled,
                         std::size_t fuel);

// One line per step:  <position> <rule> ~> <term>
std::string format_trace(const ReductionTrace& t);

}  // namespace lammu

#endif  // LAMMU_REDUCTION_HPP_
