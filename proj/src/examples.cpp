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

#include "lammu/examples.hpp"

#include <stdexcept>

#include "lammu/certificate.hpp"
#include "lammu/grammar.hpp"
#include "lammu/metatheory.hpp"
#include "lammu/search.hpp"
#include "lammu/simple_types.hpp"

namespace lammu {

namespace {

Example simple_example(const char* name, const char* judgment,
                       const char* extra) {
  Judgment j = parse_judgment(judgment, Language::Curry);
  SimpleCheck c = check_simple(j);
  if (!c) throw std::logic_error(std::string("bundled example '") + name +
                                 "' does not check");
  Example e{name, print_judgment(j), write_certificate(*c.derivation), ""};
  e.display = render_simple_derivation(*c.derivation);
  if (!j.delta.empty()) {
    NameSet fn = free_names(j.term);
    for (const auto& [a, t] : j.delta)
      if (fn.count(a))
        e.display += "free name: " + a.text + " : " + t.text() + "\n";
  }
  e.display += extra;
  return e;
}

Example no_choice() {
  const char* base = "|- mu d.[d] (\\x.mu b.[d] x) : ";
  SearchBudget b;
  b.depth = 6;
  Judgment both =
      parse_judgment(std::string(base) + "A \\/ (A -> B) |", Language::IU);
  SearchResult r = derive(both, b);
  if (!r) throw std::logic_error("bundled example 'no-choice' is not found");
  Example e{"no-choice", print_judgment(both),
            write_certificate(*r.derivation),
            render_derivation(*r.derivation)};
  for (const char* t : {"A", "A -> B"}) {
    Judgment j = parse_judgment(std::string(base) + t + " |", Language::IU);
    SearchResult m = derive(j, b);
    e.display += print_judgment(j) + "  " +
                 (m ? "found"
                   : m.cut ? "NotFoundWithinBudget (search was cut)"
                           : "NotFoundWithinBudget (no branch was cut)") +
                 "\n";
  }
  return e;
}

Example erasing() {
  ErasingCounterexample c = demo_erasing_failure();
  return Example{"erasing", print_judgment(c.mu_derivation.conclusion),
                 write_certificate(c.mu_derivation),
                 render_derivation(c.mu_derivation) + c.describe()};
}

}  // namespace

const std::vector<std::string>& example_names() {
  static const std::vector<std::string> names{"peirce", "dne", "no-choice",
                                              "erasing"};
  return names;
}

Example bundled_example(std::string_view name) {
  if (name == "peirce")
    return simple_example(
        "peirce",
        "|- \\x.mu a.[a] x (\\y.mu b.[a] y) : ((A -> B) -> A) -> A |",
        "");
  if (name == "dne")
    return simple_example(
        "dne", "|- \\y.mu a.[b] y (\\x.mu d.[a] x) : ((A -> bot) -> bot) -> A | b:bot",
        "");
  if (name == "no-choice") return no_choice();
  if (name == "erasing") return erasing();
  throw std::invalid_argument("unknown example '" + std::string(name) +
                              "'; known: peirce, dne, no-choice, erasing");
}

}  // namespace lammu
