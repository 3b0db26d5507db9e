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

#ifndef LAMMU_SEARCH_HPP_
#define LAMMU_SEARCH_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lammu/derivation.hpp"

namespace lammu {

struct SearchBudget {
  // Maximum derivation depth (a leaf has depth 1).
  std::size_t depth = 8;
  // Maximum number of components built for an intersection witness, and of
  // groups when splitting a union goal over (->E).
  std::size_t width = 2;
  // Largest witness type (in nodes) taken from the judgment's types.
  std::size_t type_size = 12;
  // Hard cap on search steps.
  std::size_t max_steps = 200000;

  SearchBudget doubled() const {
    return {depth * 2, width * 2, type_size, max_steps * 4};
  }
};

struct SearchResult {
  std::optional<Derivation> derivation;
  // Some branch was pruned by the budget or by a heuristic enumeration, so a
  // miss is inconclusive.
  bool cut = false;
  std::size_t steps = 0;

  explicit operator bool() const { return derivation.has_value(); }
};

class NotPureLambda : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EmptyInversion : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Goal-directed search in the intersection-union system. Sound (every
// result passes check_derivation); complete only within the budget.
SearchResult derive(const Judgment& j, const SearchBudget& budget);

// Search in the strict intersection system: (InterE), (InterI), (ArrowI) and
// (ArrowE) with a single arrow. Throws NotPureLambda on mu terms.
SearchResult check_strict(const LeftEnv& gamma, const Term& m, const Type& a,
                          const SearchBudget& budget);

// All strict types, with derivations, of a term whose head is a variable
// (x N1 ... Nk), within the budget.
std::vector<Derivation> synth(const LeftEnv& gamma, const Term& m,
                              const RightEnv& delta,
                              const SearchBudget& budget);

// Whether the term is x N1 ... Nk.
bool is_var_headed(const Term& m);

// Candidate witness types: strict subterms of the judgment's types up to the
// size cap, top, bot, and intersections of up to `width` of them.
std::vector<Type> witness_universe(const Judgment& j,
                                   const SearchBudget& budget,
                                   bool strict_only = false);

// One premise shape forced by the subject's head constructor. Unknown
// witness types appear as type variables spelled ?B1, ?B2, ...
struct InversionCandidate {
  DRule rule;
  std::vector<Judgment> premises;
  std::string side;
};

// Generation lemma. Throws EmptyInversion if no rule can conclude j.
std::vector<InversionCandidate> invert(const Judgment& j);

}  // namespace lammu

#endif  // LAMMU_SEARCH_HPP_
