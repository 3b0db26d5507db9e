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

#include <fstream>
#include <sstream>

#include "doctest.h"
#include "lammu/certificate.hpp"
#include "lammu/examples.hpp"
#include "lammu/grammar.hpp"
#include "lammu/search.hpp"

using namespace lammu;

namespace {

std::string golden(const std::string& name) {
  std::ifstream in(std::string(LAMMU_GOLDEN_DIR) + "/" + name + ".json",
                   std::ios::binary);
  REQUIRE_MESSAGE(in, name);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string where_of(const std::string& text) {
  try {
    read_certificate(text);
  } catch (const CertificateError& e) {
    return e.where();
  }
  return "<no error>";
}

std::string replace(std::string s, const std::string& from,
                    const std::string& to) {
  auto p = s.find(from);
  REQUIRE(p != std::string::npos);
  return s.replace(p, from.size(), to);
}

}  // namespace

TEST_CASE("bundled certificates match the golden files byte for byte") {
  for (const char* n : {"peirce", "dne", "no-choice"})
    CHECK_MESSAGE(bundled_example(n).certificate == golden(n), n);
}

TEST_CASE("round trip preserves the derivation") {
  SearchBudget b;
  b.depth = 8;
  SearchResult r = derive(
      parse_judgment("x:A /\\ (B -> C), y:B |- x y : C |", Language::IU), b);
  REQUIRE(r);
  std::string text = write_certificate(*r.derivation);
  Certificate c = read_certificate(text);
  REQUIRE(c.iu);
  CHECK(write_certificate(*c.iu) == text);
  VerifyResult v = verify_certificate(text);
  CHECK(v);
  CHECK(v.nodes == r.derivation->size());
  CHECK(text.find("\"index\": 1") != std::string::npos);
}

TEST_CASE("simple certificates round trip") {
  std::string text = golden("peirce");
  Certificate c = read_certificate(text);
  REQUIRE(c.simple);
  CHECK(c.system == "simple");
  CHECK(write_certificate(*c.simple) == text);
  VerifyResult v = verify_certificate(text);
  CHECK(v);
  CHECK(v.nodes == 7);
}

TEST_CASE("malformed documents report a JSON pointer") {
  std::string g = golden("peirce");
  CHECK(where_of("{") == "/");
  CHECK(where_of("[]") == "/");
  CHECK(where_of(replace(g, "lammu-derivation", "other")) == "/format");
  CHECK(where_of(replace(g, "\"version\": 1", "\"version\": 7")) ==
        "/version");
  CHECK(where_of(replace(g, "\"simple\"", "\"curry\"")) == "/system");
  CHECK(where_of(replace(g, "\"Mu\"", "\"Nu\"")) ==
        "/derivation/premises/0/rule");
  CHECK(where_of(replace(g, "\"judgment\": \"x:(A -> B) -> A |- x :",
                         "\"judgment\": \"x:(A -> B) -> A |- x ::")) ==
        "/derivation/premises/0/premises/0/premises/0/judgment");
  CHECK(where_of(replace(g, "\"premises\": []", "\"premises\": 3")) ==
        "/derivation/premises/0/premises/0/premises/0/premises");
}

TEST_CASE("an edited certificate parses but fails verification") {
  std::string bad = replace(golden("dne"), "|- y : (A -> bot) -> bot | a:A",
                            "|- y : A -> bot | a:A");
  VerifyResult v = verify_certificate(bad);
  CHECK_FALSE(v);
  CHECK_FALSE(v.check.path.empty());
}

TEST_CASE("InterE needs its index") {
  std::string g = golden("no-choice");
  CHECK(where_of(replace(g, "\"index\": 0", "\"index\": -1")) ==
        "/derivation/premises/0/premises/0/premises/0/side/index");
  CHECK(where_of(replace(g, "\"side\": {\n                  \"index\": 0\n                }",
                         "\"side\": {}")) ==
        "/derivation/premises/0/premises/0/premises/0/side");
}

TEST_CASE("unknown examples are rejected") {
  CHECK(example_names().size() == 4);
  CHECK_THROWS_AS(bundled_example("nope"), std::invalid_argument);
  CHECK(bundled_example("erasing").display.find("not derivable") !=
        std::string::npos);
}
