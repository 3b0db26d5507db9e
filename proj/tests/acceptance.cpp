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

// Acceptance gate: one PASS/FAIL line per criterion. Tolerances, corpus
// sizes, seeds and time limits are fixed here. Usage: acceptance [id...]

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "lammu/certificate.hpp"
#include "lammu/examples.hpp"
#include "lammu/grammar.hpp"
#include "lammu/metatheory.hpp"
#include "lammu/reduction.hpp"
#include "lammu/search.hpp"
#include "lammu/simple_types.hpp"
#include "oracles.hpp"

using namespace lammu;

namespace {

constexpr std::uint64_t kSeed = 1;
constexpr std::size_t kPreservationCases = 500;
constexpr std::size_t kSubstCases = 300;
constexpr double kSearchRate = 0.95;
// Per substitution suite; the criterion as a whole gets twice this.
constexpr double kSubstSeconds = 300;
constexpr std::size_t kMinUniverse = 200;
constexpr std::size_t kConservativityCases = 200;
constexpr std::size_t kTopCases = 100;
constexpr std::size_t kRoundTrips = 1000;

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<Outcome()> run;
};

std::string golden(const char* name) {
  std::ifstream in(std::string(LAMMU_GOLDEN_DIR) + "/" + name + ".json",
                   std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// ---------------------------------------------------------------------------
// Displayed derivations, node by node in pre-order. The printed proofs keep
// [a]M : bot as a node of its own; here mu a.[b] M is one node, so those
// rows are folded into the mu row above them. The printed environments are
// thinned unevenly, so a row matches when rule, subject and type agree
// exactly and every printed binding is present with the same type.

struct Row {
  const char* rule;
  const char* judgment;
};

const std::vector<Row> kPeirceRows = {
    {"ArrowI", "|- \\x.mu a.[a] x (\\y.mu b.[a] y) : ((A -> B) -> A) -> A |"},
    {"Mu", "x:(A -> B) -> A |- mu a.[a] x (\\y.mu b.[a] y) : A |"},
    {"ArrowE", "x:(A -> B) -> A |- x (\\y.mu b.[a] y) : A | a:A"},
    {"Ax", "x:(A -> B) -> A |- x : (A -> B) -> A | a:A"},
    {"ArrowI", "x:(A -> B) -> A |- \\y.mu b.[a] y : A -> B | a:A"},
    {"Mu", "x:(A -> B) -> A, y:A |- mu b.[a] y : B | a:A"},
    {"Ax", "x:(A -> B) -> A, y:A |- y : A | a:A, b:B"},
};

const std::vector<Row> kDneRows = {
    {"ArrowI",
     "|- \\y.mu a.[b] y (\\x.mu d.[a] x) : ((A -> bot) -> bot) -> A | b:bot"},
    {"Mu", "y:(A -> bot) -> bot |- mu a.[b] y (\\x.mu d.[a] x) : A | b:bot"},
    {"ArrowE", "y:(A -> bot) -> bot |- y (\\x.mu d.[a] x) : bot | a:A, b:bot"},
    {"Ax", "y:(A -> bot) -> bot |- y : (A -> bot) -> bot | b:bot"},
    {"ArrowI", "|- \\x.mu d.[a] x : A -> bot | a:A"},
    {"Mu", "x:A |- mu d.[a] x : bot | a:A"},
    {"Ax", "x:A |- x : A | a:A, d:bot"},
};

void preorder(const SimpleDerivation& d, std::vector<const SimpleDerivation*>& out) {
  out.push_back(&d);
  for (const auto& p : d.premises) preorder(p, out);
}

template <class Env>
bool contains(const Env& ours, const Env& printed) {
  for (const auto& [k, t] : printed) {
    auto it = ours.find(k);
    if (it == ours.end() || !type_equiv(it->second, t)) return false;
  }
  return true;
}

std::string compare_rows(const SimpleDerivation& d,
                         const std::vector<Row>& rows) {
  std::vector<const SimpleDerivation*> nodes;
  preorder(d, nodes);
  if (nodes.size() != rows.size())
    return std::to_string(nodes.size()) + " nodes, expected " +
           std::to_string(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const SimpleDerivation& n = *nodes[i];
    Judgment want = parse_judgment(rows[i].judgment, Language::Curry);
    const Judgment& got = n.conclusion;
    std::string where = "node " + std::to_string(i + 1) + ": ";
    if (std::string(srule_name(n.rule)) != rows[i].rule)
      return where + "rule " + srule_name(n.rule) + ", expected " +
             rows[i].rule;
    if (!(got.term == want.term))
      return where + "subject " + print_term(got.term);
    if (!(canonicalize(got.type) == canonicalize(want.type)))
      return where + "type " + print_type(got.type);
    if (!contains(got.gamma, want.gamma) || !contains(got.delta, want.delta))
      return where + "environments " + print_judgment(got);
  }
  return "";
}

Outcome displayed_proof(const char* judgment, const char* example,
                        const std::vector<Row>& rows) {
  Judgment j = parse_judgment(judgment, Language::Curry);
  SimpleCheck c = check_simple(j);
  if (!c) return {false, "check-simple rejects: " + c.failure->reason};
  std::string diff = compare_rows(*c.derivation, rows);
  if (!diff.empty()) return {false, diff};
  std::string shipped = golden(example);
  if (bundled_example(example).certificate != shipped)
    return {false, "bundled certificate differs from the golden file"};
  VerifyResult v = verify_certificate(shipped);
  if (!v) return {false, "golden certificate fails: " + v.check.describe()};
  Certificate cert = read_certificate(shipped);
  diff = compare_rows(*cert.simple, rows);
  if (!diff.empty()) return {false, "certificate " + diff};
  return {true, std::to_string(rows.size()) +
                    " nodes match; golden certificate verifies"};
}

Outcome peirce() {
  return displayed_proof(
      "|- \\x.mu a.[a] x (\\y.mu b.[a] y) : ((A -> B) -> A) -> A |", "peirce",
      kPeirceRows);
}

Outcome dne() {
  const char* text =
      "|- \\y.mu a.[b] y (\\x.mu d.[a] x) : ((A -> bot) -> bot) -> A | b:bot";
  Outcome o = displayed_proof(text, "dne", kDneRows);
  if (!o.pass) return o;
  Judgment j = parse_judgment(text, Language::Curry);
  NameSet fn = free_names(j.term);
  if (fn != NameSet{Name{"b"}} || !j.delta.at(Name{"b"}).is_bottom())
    return {false, "free names are not exactly b : bot"};
  if (bundled_example("dne").display.find("free name: b : bot") ==
      std::string::npos)
    return {false, "b is not reported free"};
  return {true, o.detail + "; b reported free at type bot"};
}

Outcome no_choice() {
  SearchBudget b;
  b.depth = 6;
  const std::string base = "|- mu d.[d] (\\x.mu b.[d] x) : ";
  SearchResult both =
      derive(parse_judgment(base + "A \\/ (A -> B) |", Language::IU), b);
  if (!both) return {false, "union type not found at depth 6"};
  if (!check_derivation(*both.derivation))
    return {false, "found derivation does not check"};
  if (!verify_certificate(write_certificate(*both.derivation)))
    return {false, "certificate does not verify"};
  std::string detail = "union found (" +
                       std::to_string(both.derivation->size()) + " nodes)";
  for (const char* t : {"A", "A -> B"}) {
    SearchResult r =
        derive(parse_judgment(base + t + " |", Language::IU), b);
    if (r) return {false, std::string("derivation found for ") + t};
    detail += std::string("; ") + t + ": NotFoundWithinBudget" +
              (r.cut ? " (cut)" : " (exhaustive)");
  }
  return {true, detail};
}

GenConfig suite_config() {
  GenConfig cfg;
  cfg.seed = kSeed;
  return cfg;
}

std::string stats(const SuiteReport& r) {
  std::ostringstream o;
  o << r.cases_run << " cases, " << r.checks << " checks (" << r.root_checks
    << " root), constructive " << r.constructive << ", search "
    << r.search_found << "/" << r.searched << ", budget misses "
    << r.budget_misses << " (" << r.misses_cleared << " cleared)";
  return o.str();
}

Outcome preservation(bool reduction) {
  RuleSet rules{Rule::Beta, Rule::Mu, Rule::Renaming};
  SuiteReport r =
      reduction ? suite_subject_reduction(suite_config(), rules,
                                          SearchBudget{}, kPreservationCases)
                : suite_subject_expansion(suite_config(), rules,
                                          SearchBudget{}, kPreservationCases);
  std::string s = stats(r);
  if (r.cases_run != kPreservationCases) return {false, s};
  if (!r.passed())
    return {false, s + "; first failure: " + r.failures.front().detail};
  if (r.root_checks == 0) return {false, s + "; no root steps exercised"};
  // Every root check is constructive; failures would have been recorded.
  return {true, s};
}

Outcome substitution() {
  std::string detail;
  bool pass = true;
  for (bool term : {true, false}) {
    auto t0 = std::chrono::steady_clock::now();
    SuiteReport r =
        term ? suite_term_subst(suite_config(), SearchBudget{}, kSubstCases)
             : suite_struct_subst(suite_config(), SearchBudget{}, kSubstCases);
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
    double rate = r.searched ? double(r.search_found) / r.searched : 0.0;
    bool ok = r.passed() && r.cases_run == kSubstCases &&
              r.constructive == 2 * kSubstCases && rate >= kSearchRate &&
              r.search_found + r.misses_cleared == r.searched &&
              secs <= kSubstSeconds;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.1f%% in %.1fs", 100 * rate, secs);
    detail += std::string(detail.empty() ? "" : "; ") + r.suite + ": " +
              stats(r) + ", search rate " + buf;
    pass = pass && ok;
  }
  return {pass, detail};
}

Outcome erasing() {
  ErasingCounterexample c = demo_erasing_failure();
  const Judgment& j = c.mu_derivation.conclusion;
  if (!check_derivation(c.mu_derivation))
    return {false, "mu derivation does not check"};
  if (!j.term.is_mu() || j.term.bound() != j.term.named() ||
      free_names(j.term.body()).count(j.term.bound()))
    return {false, "subject is not an erasing redex"};
  if (!alpha_eq(step(j.term, {}, Rule::Erasing), c.erased.term))
    return {false, "erased judgment is not the erasing reduct"};
  if (c.erased.gamma != j.gamma || !(c.erased.type == j.type))
    return {false, "erased judgment changes the context or type"};
  if (c.erased_result) return {false, "erased judgment is derivable"};
  if (c.erased_result.cut) return {false, "erased search was cut"};
  return {true, print_judgment(j) + " reduces to " +
                    print_judgment(c.erased) + ", exhaustively underivable"};
}

Outcome subtype_oracle() {
  oracle::SubtypeClosure closure(oracle::enumerated_universe());
  const auto& u = closure.universe();
  if (u.size() < kMinUniverse)
    return {false, "universe has only " + std::to_string(u.size()) + " types"};
  std::size_t agree = 0, positive = 0;
  std::string first;
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < u.size(); ++j) {
      bool got = subtype(u[i], u[j]);
      positive += got;
      if (got == closure.leq(i, j))
        ++agree;
      else if (first.empty())
        first = u[i].text() + " <= " + u[j].text();
    }
  std::size_t pairs = u.size() * u.size();
  std::string detail = std::to_string(u.size()) + " types, " +
                       std::to_string(agree) + "/" + std::to_string(pairs) +
                       " pairs agree (" + std::to_string(positive) +
                       " related)";
  if (!first.empty()) detail += "; first disagreement " + first;
  return {agree == pairs, detail};
}

bool has_union(const Type& t) {
  switch (t.kind()) {
    case Type::Kind::Var: return false;
    case Type::Kind::Arrow: return has_union(t.left()) || has_union(t.right());
    case Type::Kind::Inter:
      for (const auto& p : t.parts())
        if (has_union(p)) return true;
      return false;
    case Type::Kind::Union: return true;
  }
  return true;
}

bool union_free(const Judgment& j) {
  for (const auto& [x, t] : j.gamma)
    if (has_union(t)) return false;
  return !has_union(j.type);
}

Outcome conservativity() {
  SearchBudget b;
  // (a) pure terms: generated cases, principal simple typings and random
  // (mostly untypable) judgments.
  std::vector<Judgment> pure;
  GenConfig cfg = suite_config();
  cfg.mu_frequency = 0;
  for (std::uint64_t i = 0; i < 5000 && pure.size() < kConservativityCases / 2;
       ++i) {
    Judgment j = gen_case(cfg, i).judgment;
    j.delta.clear();
    if (union_free(j)) pure.push_back(j);
  }
  oracle::RandomSyntax rs(kSeed);
  while (pure.size() < kConservativityCases) {
    Term m = rs.term(2 + rs.below(7), false);
    Judgment j{{}, m, rs.strict_type(2, true), {}};
    bool principal = pure.size() % 2 == 0;
    if (principal) {
      InferResult r = infer_simple(m);
      if (!r) continue;
      j.gamma = r.typing->gamma;
      j.type = r.typing->type;
    } else {
      for (const auto& x : free_term_vars(m))
        j.gamma.insert_or_assign(x, rs.strict_type(2, true));
    }
    pure.push_back(canonicalize(j));
  }
  std::size_t agree = 0, found = 0;
  std::string first;
  for (const auto& j : pure) {
    bool iu = derive(j, b).derivation.has_value();
    bool strict = check_strict(j.gamma, j.term, j.type, b).derivation.has_value();
    found += iu;
    if (iu == strict)
      ++agree;
    else if (first.empty())
      first = print_judgment(j);
  }

  // (b) simple typings of lambda-mu terms read at n = 1.
  std::size_t embedded = 0, tried = 0;
  std::string bad;
  while (embedded < kConservativityCases && tried < 20000) {
    ++tried;
    Term m = rs.term(2 + rs.below(9), true);
    InferResult r = infer_simple(m);
    if (!r) continue;
    Judgment j{r.typing->gamma, m, r.typing->type, r.typing->delta};
    SimpleCheck c = check_simple(j);
    if (!c) {
      if (bad.empty()) bad = "principal typing rejected: " + print_judgment(j);
      continue;
    }
    Derivation e = embed_simple(*c.derivation);
    CheckResult ok = check_derivation(e);
    if (ok && e.conclusion.term == m)
      ++embedded;
    else if (bad.empty())
      bad = "embedding fails: " + print_judgment(j) + " " + ok.describe();
  }
  std::string detail = "pure: " + std::to_string(agree) + "/" +
                       std::to_string(pure.size()) + " agree (" +
                       std::to_string(found) + " typable); embedded: " +
                       std::to_string(embedded) + "/" +
                       std::to_string(kConservativityCases);
  if (!first.empty()) detail += "; first disagreement " + first;
  if (!bad.empty()) detail += "; " + bad;
  return {agree == pure.size() && embedded == kConservativityCases &&
              bad.empty(),
          detail};
}

Outcome top_typability() {
  oracle::RandomSyntax rs(kSeed + 1);
  SearchBudget b;
  std::size_t ok = 0;
  std::string first;
  for (std::size_t i = 0; i < kTopCases; ++i) {
    Term m = rs.term(1 + rs.below(12), true);
    Judgment j{{}, m, Type::top(), {}};
    for (const auto& x : free_term_vars(m)) {
      Type t = canonicalize(rs.any_type(2));
      while (!well_formed(t, Language::IU)) t = canonicalize(rs.any_type(2));
      j.gamma.insert_or_assign(x, t);
    }
    for (const auto& a : free_names(m))
      j.delta.insert_or_assign(a, canonicalize(rs.strict_type(2, false)));
    SearchResult r = derive(j, b);
    bool good = r && r.derivation->rule == DRule::InterI &&
                r.derivation->premises.empty() &&
                check_derivation(*r.derivation);
    if (good)
      ++ok;
    else if (first.empty())
      first = print_judgment(j);
  }
  std::string detail = std::to_string(ok) + "/" + std::to_string(kTopCases) +
                       " by (InterI) with no premises";
  if (!first.empty()) detail += "; first miss " + first;
  return {ok == kTopCases, detail};
}

Outcome round_trip() {
  oracle::RandomSyntax rs(kSeed + 2);
  std::size_t terms = 0, types = 0;
  std::string first;
  for (std::size_t i = 0; i < kRoundTrips; ++i) {
    Term m = rs.term(1 + rs.below(25), rs.coin(0.7));
    std::string text = print_term(m);
    try {
      Term back = parse_term(text);
      if (alpha_eq(back, m) && print_term(back) == text)
        ++terms;
      else if (first.empty())
        first = "term " + text;
    } catch (const std::exception& e) {
      if (first.empty()) first = "term " + text + ": " + e.what();
    }
  }
  std::size_t drawn = 0;
  while (drawn < kRoundTrips) {
    Type t = rs.any_type(3);
    if (!well_formed(t, Language::IU)) continue;
    ++drawn;
    Type canon = canonicalize(t);
    std::string text = print_type(t);
    try {
      // Both the drawn form and its canonical form must come back intact.
      Type back = parse_type(text, Language::IU);
      Type canon_back = parse_type(print_type(canon), Language::IU);
      if (canonicalize(back) == canon && canon_back == canon)
        ++types;
      else if (first.empty())
        first = "type " + text;
    } catch (const std::exception& e) {
      if (first.empty()) first = "type " + text + ": " + e.what();
    }
  }
  std::string detail = "terms " + std::to_string(terms) + "/" +
                       std::to_string(kRoundTrips) + ", types " +
                       std::to_string(types) + "/" +
                       std::to_string(kRoundTrips);
  if (!first.empty()) detail += "; first mismatch " + first;
  return {terms == kRoundTrips && types == kRoundTrips, detail};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all = {
      {1, "peirce-reproduction", 1, peirce},
      {2, "double-negation-reproduction", 1, dne},
      {3, "no-choice-reproduction", 10, no_choice},
      {4, "subject-reduction-suite", 300, [] { return preservation(true); }},
      {5, "subject-expansion-suite", 300, [] { return preservation(false); }},
      {6, "substitution-suites", 600, substitution},
      {7, "erasing-failure", 30, erasing},
      {8, "subtype-oracle-equivalence", 60, subtype_oracle},
      {9, "conservativity", 120, conservativity},
      {10, "top-typability", 10, top_typability},
      {11, "parser-round-trip", 30, round_trip},
  };
  std::set<int> wanted;
  for (int i = 1; i < argc; ++i) wanted.insert(std::atoi(argv[i]));

  int failed = 0;
  for (const auto& c : all) {
    if (!wanted.empty() && !wanted.count(c.id)) continue;
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
    bool in_time = secs <= c.limit_seconds;
    bool pass = o.pass && in_time;
    failed += !pass;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2fs/%.0fs", secs, c.limit_seconds);
    std::cout << (pass ? "PASS" : "FAIL") << " " << c.id << " " << c.name
              << " [" << timing << "] " << o.detail
              << (in_time ? "" : " (time limit exceeded)") << std::endl;
  }
  std::cout << (failed ? "ACCEPTANCE FAILED: " : "ACCEPTANCE PASSED: ")
            << failed << " failing" << std::endl;
  return failed ? 1 : 0;
}
