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

// Random derivation builder shared by the generators and the suites.

#ifndef LAMMU_SRC_GEN_HPP_
#define LAMMU_SRC_GEN_HPP_

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "lammu/metatheory.hpp"

namespace lammu::detail {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

// Builds derivations top-down. Free variables and names form a "world"
// that grows as leaves need them; nodes only record their binders until
// finalize() merges the world into every environment.
class Gen {
 public:
  struct Ctx {
    LeftEnv g;
    RightEnv d;
  };

  Gen(const GenConfig& cfg, std::uint64_t seed);

  bool chance(double p);
  std::size_t below(std::size_t n);

  Type rand_strict(int depth);
  Type rand_type(int depth);
  // Nonempty union of some components of t.
  Type sub_union(const Type& t);

  Derivation strict(const Ctx& ctx, const Type& a);
  Derivation any(const Ctx& ctx, const Type& c);
  Derivation leaf(const Ctx& ctx, const Type& a);
  Term random_term(const Ctx& ctx, std::size_t size);

  Var new_world_var(const Type& t);
  Name new_world_name(const Type& t);

  Derivation finalize(const Derivation& d, const VarSet& drop_vars = {},
                      const NameSet& drop_names = {}) const;

  void set_fuel(std::size_t f) { fuel_ = f; }

  LeftEnv world_g;
  RightEnv world_d;
  // Types the random type builder likes to reuse.
  std::vector<Type> hints;
  std::optional<Var> prefer_var;
  std::optional<Name> prefer_name;

 private:
  Derivation arrow_e(const Ctx& ctx, const Type& a);
  Derivation union_e(const Ctx& ctx, const Type& a);
  Var binder_var(const Ctx& ctx);
  Name binder_name(const Ctx& ctx);

  const GenConfig& cfg_;
  std::mt19937_64 rng_;
  std::size_t fuel_ = 0;
  VarSet reserved_vars_;
  NameSet reserved_names_;
};

// x : t from x : c where every component of t is one of c.
Derivation project(const LeftEnv& g, const Var& x, const Type& c,
                   const Type& t, const RightEnv& d);

}  // namespace lammu::detail

#endif  // LAMMU_SRC_GEN_HPP_
