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

#include "lammu/lammu.h"

#include <exception>
#include <memory>
#include <sstream>
#include <string>
#include <string_view>

#include "lammu/certificate.hpp"
#include "lammu/examples.hpp"
#include "lammu/grammar.hpp"
#include "lammu/metatheory.hpp"
#include "lammu/reduction.hpp"
#include "lammu/search.hpp"
#include "lammu/simple_types.hpp"

struct lammu_term {
  lammu::Term term;
};

struct lammu_output {
  std::string text;
  std::string certificate;
};

namespace {

using namespace lammu;

thread_local std::string last_error;

// Error raised inside a command with a ready status.
struct Failure {
  lammu_status status;
  std::string message;
};

// Runs f, translating exceptions. `source` is the text being parsed, used to
// render caret diagnostics.
template <class F>
lammu_status guarded(std::string_view source, F&& f) {
  try {
    return f();
  } catch (const Failure& e) {
    last_error = e.message;
    return e.status;
  } catch (const ParseError& e) {
    last_error = render_diagnostic(source, e.span(), e.what());
  } catch (const LanguageViolation& e) {
    last_error = render_diagnostic(source, e.span(), e.what());
  } catch (const CertificateError& e) {
    last_error = e.what();
  } catch (const std::invalid_argument& e) {
    last_error = e.what();
  } catch (const std::exception& e) {
    last_error = std::string("internal error: ") + e.what();
    return LAMMU_INTERNAL_ERROR;
  } catch (...) {
    last_error = "internal error";
    return LAMMU_INTERNAL_ERROR;
  }
  return LAMMU_PARSE_ERROR;
}

lammu_status emit(lammu_output** out, lammu_status s, std::string text,
                  std::string certificate = {}) {
  *out = new lammu_output{std::move(text), std::move(certificate)};
  return s;
}

lammu_status null_arg(const char* what) {
  last_error = std::string("null argument: ") + what;
  return LAMMU_PARSE_ERROR;
}

// Names used free in the subject, with their types.
std::string free_name_lines(const Judgment& j) {
  std::string s;
  NameSet fn = free_names(j.term);
  for (const auto& [a, t] : j.delta)
    if (fn.count(a)) s += "free name: " + a.text + " : " + print_type(t) + "\n";
  return s;
}

std::string miss_text(const SearchResult& r) {
  return r.cut ? "NotFoundWithinBudget (search was cut)\n"
               : "NotFoundWithinBudget (no branch was cut)\n";
}

RuleSet preservation_rules() {
  return {Rule::Beta, Rule::Mu, Rule::Renaming};
}

}  // namespace

extern "C" {

const char* lammu_version(void) { return "0.1.0"; }

const char* lammu_status_name(lammu_status s) {
  switch (s) {
    case LAMMU_OK: return "ok";
    case LAMMU_INVALID: return "invalid";
    case LAMMU_PARSE_ERROR: return "parse error";
    case LAMMU_BUDGET_EXHAUSTED: return "budget exhausted";
    case LAMMU_INTERNAL_ERROR: return "internal error";
  }
  return "unknown";
}

const char* lammu_last_error(void) { return last_error.c_str(); }

lammu_status lammu_term_parse(const char* text, lammu_term** out) {
  if (!text || !out) return null_arg("text/out");
  *out = nullptr;
  return guarded(text, [&] {
    *out = new lammu_term{parse_term(text)};
    return LAMMU_OK;
  });
}

void lammu_term_free(lammu_term* t) { delete t; }

char* lammu_term_print(const lammu_term* t) {
  if (!t) return nullptr;
  std::string s = print_term(t->term);
  char* r = new char[s.size() + 1];
  s.copy(r, s.size());
  r[s.size()] = '\0';
  return r;
}

size_t lammu_term_size(const lammu_term* t) { return t ? t->term.size() : 0; }

int lammu_term_alpha_eq(const lammu_term* a, const lammu_term* b) {
  return a && b && alpha_eq(a->term, b->term);
}

void lammu_string_free(char* s) { delete[] s; }

const char* lammu_output_text(const lammu_output* o) {
  return o ? o->text.c_str() : "";
}

const char* lammu_output_certificate(const lammu_output* o) {
  return o ? o->certificate.c_str() : "";
}

void lammu_output_free(lammu_output* o) { delete o; }

lammu_status lammu_fmt(const char* text, int canonical, lammu_output** out) {
  if (!text || !out) return null_arg("text/out");
  *out = nullptr;
  return guarded(text, [&] {
    std::string_view src(text);
    if (src.find("|-") != std::string_view::npos) {
      Judgment j = parse_judgment(src, Language::IU);
      if (canonical)
        j = Judgment{canonicalize(j.gamma), j.term, canonicalize(j.type),
                     canonicalize(j.delta)};
      return emit(out, LAMMU_OK, print_judgment(j) + "\n");
    }
    try {
      return emit(out, LAMMU_OK, print_term(parse_term(src)) + "\n");
    } catch (const ParseError& term_error) {
      try {
        Type t = parse_type(src, Language::IU);
        return emit(out, LAMMU_OK,
                    print_type(canonical ? canonicalize(t) : t) + "\n");
      } catch (const ParseError& type_error) {
        // Report whichever reading got further.
        if (type_error.span().start > term_error.span().start) throw;
        throw term_error;
      }
    }
  });
}

lammu_status lammu_reduce(const lammu_term* t, const char* rules, size_t fuel,
                          int trace, lammu_output** out) {
  if (!t || !rules || !out) return null_arg("term/rules/out");
  *out = nullptr;
  return guarded(rules, [&] {
    ReductionTrace r = normalize(t->term, parse_rule_set(rules), fuel);
    std::string text = trace ? format_trace(r) : "";
    text += print_term(r.final_term()) + "\n";
    if (r.fuel_exhausted) {
      last_error = "fuel exhausted after " + std::to_string(r.steps.size()) +
                   " steps; the term shown is not a normal form";
      return emit(out, LAMMU_BUDGET_EXHAUSTED, text);
    }
    return emit(out, LAMMU_OK, text);
  });
}

lammu_status lammu_check_simple(const char* judgment, lammu_output** out) {
  if (!judgment || !out) return null_arg("judgment/out");
  *out = nullptr;
  return guarded(judgment, [&] {
    Judgment j = parse_judgment(judgment, Language::Curry);
    SimpleCheck c = check_simple(j);
    if (!c) {
      const SimpleFailure& f = *c.failure;
      last_error = std::string("(") + srule_name(f.rule) + ") at " +
                   f.judgment + ": " + f.reason;
      return emit(out, LAMMU_INVALID, "invalid\n");
    }
    return emit(out, LAMMU_OK,
                "valid\n" + render_simple_derivation(*c.derivation) +
                    free_name_lines(j),
                write_certificate(*c.derivation));
  });
}

lammu_status lammu_infer_simple(const lammu_term* t, lammu_output** out) {
  if (!t || !out) return null_arg("term/out");
  *out = nullptr;
  return guarded("", [&] {
    InferResult r = infer_simple(t->term);
    if (!r) {
      const UntypableReport& u = *r.report;
      last_error = "untypable (" + u.kind + "): " + u.left + " vs " +
                   u.right + (u.detail.empty() ? "" : "; " + u.detail);
      return emit(out, LAMMU_INVALID, "untypable\n");
    }
    Judgment j{r.typing->gamma, t->term, r.typing->type, r.typing->delta};
    return emit(out, LAMMU_OK, print_judgment(j) + "\n");
  });
}

lammu_status lammu_check_iu(const char* judgment, size_t depth, size_t width,
                            lammu_output** out) {
  if (!judgment || !out) return null_arg("judgment/out");
  *out = nullptr;
  return guarded(judgment, [&] {
    if (depth == 0 || width == 0)
      throw Failure{LAMMU_PARSE_ERROR, "depth and width must be positive"};
    Judgment j = parse_judgment(judgment, Language::IU);
    SearchBudget b;
    b.depth = depth;
    b.width = width;
    SearchResult r = derive(j, b);
    if (r)
      return emit(out, LAMMU_OK, "found\n" + render_derivation(*r.derivation),
                  write_certificate(*r.derivation));
    last_error = "no derivation within depth " + std::to_string(depth) +
                 ", width " + std::to_string(width);
    return emit(out, r.cut ? LAMMU_BUDGET_EXHAUSTED : LAMMU_INVALID,
                miss_text(r));
  });
}

lammu_status lammu_verify(const char* certificate, lammu_output** out) {
  if (!certificate || !out) return null_arg("certificate/out");
  *out = nullptr;
  return guarded("", [&] {
    VerifyResult v = verify_certificate(certificate);
    std::string what = v.system + " derivation, " + std::to_string(v.nodes) +
                       (v.nodes == 1 ? " node" : " nodes");
    if (!v) {
      last_error = v.check.describe();
      return emit(out, LAMMU_INVALID, "invalid " + what + "\n");
    }
    return emit(out, LAMMU_OK, "valid " + what + "\n");
  });
}

uint64_t lammu_default_seed(void) { return GenConfig{}.seed; }

lammu_status lammu_metatheory(const char* suite, uint64_t seed, size_t cases,
                              size_t depth, size_t max_size,
                              lammu_output** out) {
  if (!suite || !out) return null_arg("suite/out");
  *out = nullptr;
  return guarded("", [&] {
    std::string name(suite);
    const bool all = name == "all";
    GenConfig cfg;
    cfg.seed = seed;
    if (max_size) cfg.max_term_size = max_size;
    cfg.validate();
    if (depth == 0) throw Failure{LAMMU_PARSE_ERROR, "depth must be positive"};
    SearchBudget b;
    b.depth = depth;

    std::string text;
    bool ok = true;
    bool known = false;
    auto run = [&](const char* n, auto&& f) {
      if (!all && name != n) return;
      known = true;
      SuiteReport r = f();
      ok = ok && r.passed();
      text += r.serialize();
    };
    run("subject-reduction", [&] {
      return suite_subject_reduction(cfg, preservation_rules(), b, cases);
    });
    run("subject-expansion", [&] {
      return suite_subject_expansion(cfg, preservation_rules(), b, cases);
    });
    run("term-subst", [&] { return suite_term_subst(cfg, b, cases); });
    run("struct-subst", [&] { return suite_struct_subst(cfg, b, cases); });
    if (all || name == "erasing") {
      known = true;
      text += demo_erasing_failure().describe();
    }
    if (!known)
      throw Failure{LAMMU_PARSE_ERROR,
                    "unknown suite '" + name +
                        "'; expected subject-reduction, subject-expansion, "
                        "term-subst, struct-subst, erasing or all"};
    if (!ok) last_error = "genuine failures reported";
    return emit(out, ok ? LAMMU_OK : LAMMU_INVALID, text);
  });
}

const char* lammu_example_names(void) {
  static const std::string names = [] {
    std::string s;
    for (const auto& n : example_names()) s += (s.empty() ? "" : ",") + n;
    return s;
  }();
  return names.c_str();
}

lammu_status lammu_example(const char* name, lammu_output** out) {
  if (!name || !out) return null_arg("name/out");
  *out = nullptr;
  return guarded("", [&] {
    Example e = bundled_example(name);
    return emit(out, LAMMU_OK, e.display, e.certificate);
  });
}

}  // extern "C"
