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

#ifndef LAMMU_TRANSFORM_HPP_
#define LAMMU_TRANSFORM_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "lammu/derivation.hpp"
#include "lammu/reduction.hpp"

namespace lammu {

class IndexOutOfRange : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PreconditionViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A proof transformation met a shape it cannot handle.
class ConstructionFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// From |- M : A1 /\ ... /\ An produce |- M : Ai (0-based). A strict
// conclusion counts as a one-component intersection.
Derivation inter_elim(const Derivation& d, std::size_t i);

// Restricts every environment to the free identifiers of the conclusion's
// subject plus the binders above the node.
Derivation thin(const Derivation& d);

// Re-derives the conclusion under G' <= G and D <= D'. Variable leaves are
// re-projected from G'; a leaf without an exact component is wrapped in a
// Weaken node.
Derivation weaken(const Derivation& d, const LeftEnv& gamma,
                  const RightEnv& delta);

// The same derivation for an alpha-equivalent subject.
Derivation realign(const Derivation& d, const Term& target);

// Term substitution lemma, constructive direction: from G, x:C |- M : A | D
// and G |- N : C | D build G |- M[N/x] : A | D.
Derivation term_subst_lemma(const Derivation& dm, const Var& x,
                            const Derivation& dn);

struct TermSubstWitness {
  Type c;
  Derivation dm;  // G, x:C |- M : A | D
  Derivation dn;  // G |- N : C | D
};

// Decomposition: from a derivation of M[N/x] recover C and both premises.
// The free variables of N must not be captured in M.
TermSubstWitness term_subst_decompose(const Derivation& d, const Term& m,
                                      const Var& x, const Term& n);

// Structural substitution lemma, constructive direction: from
// G |- M : C | a:U, D with U = (A1 -> B1) \/ ... \/ (An -> Bn) and
// derivations of G |- N : Ai | D (in the canonical order of U's arrows)
// build G |- M[N.g/a] : C | g:B1 \/ ... \/ Bn, D.
Derivation struct_subst_lemma(const Derivation& dm, const Name& a,
                              const Term& n,
                              const std::vector<Derivation>& dn,
                              const Name& g);

struct StructSubstWitness {
  Type arrows;                // (A1 -> B1) \/ ... \/ (An -> Bn)
  Derivation dm;              // G |- M : C | a:arrows, D
  std::vector<Derivation> dn; // G |- N : Ai | D
};

// Decomposition of a derivation of M[N.g/a] : C | g:V, D.
StructSubstWitness struct_subst_decompose(const Derivation& d, const Term& m,
                                          const Name& a, const Term& n,
                                          const Name& g);

// Subject reduction: from G |- M : A | D and M -> N by `rule` at `pos`
// (beta, mu or renaming) build G |- N : A | D. Intersections are handled
// componentwise.
Derivation subject_reduction(const Derivation& d, const Position& pos,
                             Rule rule);

// Subject expansion: from G |- N : A | D where m -> N by `rule` at `pos`,
// build G |- m : A | D.
Derivation subject_expansion(const Derivation& d, const Term& m,
                             const Position& pos, Rule rule);

}  // namespace lammu

#endif  // LAMMU_TRANSFORM_HPP_
