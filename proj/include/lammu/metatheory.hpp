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

#ifndef LAMMU_METATHEORY_HPP_
#define LAMMU_METATHEORY_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lammu/derivation.hpp"
#include "lammu/reduction.hpp"
#include "lammu/search.hpp"

namespace lammu {

struct GenConfig {
  std::uint64_t seed = 1;
  std::size_t max_term_size = 10;
  // Distinct free names and free variables drawn before primes are used.
  std::size_t name_pool = 3;
  std::size_t var_pool = 4;
  // Relative weight of (UnionE) while building; 0 gives pure lambda terms.
  double mu_frequency = 0.3;

  // Throws std::invalid_argument.
  void validate() const;
};

struct TypedCase {
  Judgment judgment;
  Derivation derivation;
};

// Case `index` of the corpus of `cfg`; cases are independent of each other.
TypedCase gen_case(const GenConfig& cfg, std::uint64_t index);

// The first `count` cases.
std::vector<TypedCase> gen_typed_judgment(const GenConfig& cfg,
                                          std::size_t count);

struct SuiteFailure {
  std::size_t case_index = 0;
  std::string input;
  std::string stage;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::size_t cases_run = 0;
  std::vector<SuiteFailure> failures;
  // Searches that found nothing within the given budget (inconclusive).
  std::size_t budget_misses = 0;
  // Budget misses that were found again at the doubled budget.
  std::size_t misses_cleared = 0;
  std::vector<SuiteFailure> misses;

  // Individual checks, and how they were settled.
  std::size_t checks = 0;
  std::size_t root_checks = 0;
  std::size_t constructive = 0;
  std::size_t searched = 0;
  std::size_t search_found = 0;

  bool passed() const { return failures.empty(); }
  // Line-oriented text ending in
  //   SUITE <name> RUN <n> FAIL <n> BUDGET_MISS <n>
  std::string serialize() const;
};

// Rules must be a subset of {beta, mu, renaming}; throws
// std::invalid_argument otherwise.
SuiteReport suite_subject_reduction(const GenConfig& cfg,
                                    const RuleSet& rules,
                                    const SearchBudget& budget,
                                    std::size_t cases);

SuiteReport suite_subject_expansion(const GenConfig& cfg,
                                    const RuleSet& rules,
                                    const SearchBudget& budget,
                                    std::size_t cases);

SuiteReport suite_term_subst(const GenConfig& cfg, const SearchBudget& budget,
                             std::size_t cases);

SuiteReport suite_struct_subst(const GenConfig& cfg,
                               const SearchBudget& budget,
                               std::size_t cases);

struct ErasingCounterexample {
  // G |- mu a.[a] M : U | D with a not free in M.
  Derivation mu_derivation;
  // G |- M : U | D, not derivable.
  Judgment erased;
  SearchResult erased_result;
  SearchBudget erased_budget;
  // G |- M : Aj | D for one component Aj of U.
  Derivation component;
  std::string note;

  std::string describe() const;
};

// Searches small instances of the erasing schema and returns the first one
// confirmed by the checker and by search. Throws ConstructionFailure if
// none is found.
ErasingCounterexample demo_erasing_failure();

}  // namespace lammu

#endif  // LAMMU_METATHEORY_HPP_
