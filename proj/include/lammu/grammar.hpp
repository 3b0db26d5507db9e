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

#ifndef LAMMU_GRAMMAR_HPP_
#define LAMMU_GRAMMAR_HPP_

#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>

#include "lammu/judgment.hpp"
#include "lammu/syntax.hpp"
#include "lammu/types.hpp"

namespace lammu {

// Byte offsets into the parsed text; start <= end.
struct SourceSpan {
  std::size_t start = 0;
  std::size_t end = 0;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, SourceSpan span,
             std::set<std::string> expected = {});
  SourceSpan span() const { return span_; }
  const std::set<std::string>& expected() const { return expected_; }

 private:
  SourceSpan span_;
  std::set<std::string> expected_;
};

// The text parses but the result is outside the requested type language.
class LanguageViolation : public std::runtime_error {
 public:
  LanguageViolation(const std::string& msg, SourceSpan span);
  SourceSpan span() const { return span_; }

 private:
  SourceSpan span_;
};

// Names reserved for the name namespace; never accepted as term variables.
bool is_reserved_name_word(std::string_view word);

Term parse_term(std::string_view text);
// The parse tree as written (not canonicalized), checked against `lang`.
Type parse_type(std::string_view text, Language lang);
// Parses  G |- M : A | D . Types are canonicalized; the environments must
// fit `lang` (left images intersections of strict types, right images
// strict).
Judgment parse_judgment(std::string_view text, Language lang);
// "/" or "/0/1".
Position parse_position(std::string_view text);

std::string print_term(const Term& t);
std::string print_type(const Type& t);
std::string print_left_env(const LeftEnv& g);
std::string print_right_env(const RightEnv& d);
std::string print_judgment(const Judgment& j);

// One-line rendering of a ParseError/LanguageViolation with a caret line.
std::string render_diagnostic(std::string_view text, SourceSpan span,
                              const std::string& message);

}  // namespace lammu

#endif  // LAMMU_GRAMMAR_HPP_
