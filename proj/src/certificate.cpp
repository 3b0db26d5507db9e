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

#include "lammu/certificate.hpp"

#include <json.hpp>

#include "lammu/grammar.hpp"

namespace lammu {

using json = nlohmann::ordered_json;

namespace {

constexpr const char* kFormat = "lammu-derivation";
constexpr int kVersion = 1;

json side_of(const Derivation& d) {
  json side = json::object();
  const Judgment& c = d.conclusion;
  switch (d.rule) {
    case DRule::InterE:
      side["index"] = d.index;
      break;
    case DRule::UnionENamed:
    case DRule::UnionESelf: {
      Type target = canonicalize(c.type);
      if (d.rule == DRule::UnionENamed) {
        auto it = c.delta.find(c.term.named());
        if (it != c.delta.end()) target = canonicalize(it->second);
      }
      if (!d.premises.empty())
        side["leq"] = json::array(
            {canonicalize(d.premises[0].conclusion.type).text(),
             target.text()});
      break;
    }
    default:
      break;
  }
  return side;
}

json to_json(const Derivation& d) {
  json j;
  j["rule"] = drule_name(d.rule);
  j["judgment"] = print_judgment(d.conclusion);
  j["side"] = side_of(d);
  json ps = json::array();
  for (const auto& p : d.premises) ps.push_back(to_json(p));
  j["premises"] = std::move(ps);
  return j;
}

json to_json(const SimpleDerivation& d) {
  json j;
  j["rule"] = srule_name(d.rule);
  j["judgment"] = print_judgment(d.conclusion);
  j["side"] = json::object();
  json ps = json::array();
  for (const auto& p : d.premises) ps.push_back(to_json(p));
  j["premises"] = std::move(ps);
  return j;
}

std::string document(const char* system, json tree) {
  json doc;
  doc["format"] = kFormat;
  doc["version"] = kVersion;
  doc["system"] = system;
  doc["derivation"] = std::move(tree);
  return doc.dump(2) + "\n";
}

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw CertificateError(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end())
    throw CertificateError(where, std::string("missing field '") + key + "'");
  return *it;
}

std::string text_field(const json& j, const char* key,
                       const std::string& where) {
  const json& v = field(j, key, where);
  if (!v.is_string())
    throw CertificateError(where + "/" + key, "expected a string");
  return v.get<std::string>();
}

Judgment judgment_field(const json& j, const std::string& where,
                        Language lang) {
  std::string text = text_field(j, "judgment", where);
  try {
    return parse_judgment(text, lang);
  } catch (const std::exception& e) {
    throw CertificateError(where + "/judgment", e.what());
  }
}

const json& premises_of(const json& j, const std::string& where) {
  const json& ps = field(j, "premises", where);
  if (!ps.is_array())
    throw CertificateError(where + "/premises", "expected an array");
  return ps;
}

Derivation read_iu(const json& j, const std::string& where) {
  std::string rule = text_field(j, "rule", where);
  DRule r;
  try {
    r = parse_drule(rule);
  } catch (const std::invalid_argument&) {
    throw CertificateError(where + "/rule", "unknown rule '" + rule + "'");
  }
  Derivation d{judgment_field(j, where, Language::IU),
               r, {}, 0};
  if (j.contains("side")) {
    const json& side = j["side"];
    if (!side.is_object())
      throw CertificateError(where + "/side", "expected an object");
    if (d.rule == DRule::InterE) {
      const json& idx = field(side, "index", where + "/side");
      if (!idx.is_number_unsigned())
        throw CertificateError(where + "/side/index",
                               "expected a non-negative integer");
      d.index = idx.get<std::size_t>();
    }
  } else if (d.rule == DRule::InterE) {
    throw CertificateError(where, "missing field 'side'");
  }
  const json& ps = premises_of(j, where);
  for (std::size_t i = 0; i < ps.size(); ++i)
    d.premises.push_back(
        read_iu(ps[i], where + "/premises/" + std::to_string(i)));
  return d;
}

SimpleDerivation read_simple(const json& j, const std::string& where) {
  std::string rule = text_field(j, "rule", where);
  SRule r;
  try {
    r = parse_srule(rule);
  } catch (const std::invalid_argument&) {
    throw CertificateError(where + "/rule", "unknown rule '" + rule + "'");
  }
  SimpleDerivation d{
      judgment_field(j, where, Language::Curry), r,
      {}};
  const json& ps = premises_of(j, where);
  for (std::size_t i = 0; i < ps.size(); ++i)
    d.premises.push_back(
        read_simple(ps[i], where + "/premises/" + std::to_string(i)));
  return d;
}

std::size_t count(const SimpleDerivation& d) { return d.size(); }
std::size_t count(const Derivation& d) { return d.size(); }

}  // namespace

CertificateError::CertificateError(const std::string& where,
                                   const std::string& msg)
    : std::runtime_error("certificate " + (where.empty() ? "/" : where) +
                         ": " + msg),
      where_(where.empty() ? "/" : where) {}

std::string write_certificate(const Derivation& d) {
  return document("iu", to_json(d));
}

std::string write_certificate(const SimpleDerivation& d) {
  return document("simple", to_json(d));
}

Certificate read_certificate(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw CertificateError("", std::string("not JSON: ") + e.what());
  }
  if (text_field(doc, "format", "") != kFormat)
    throw CertificateError("/format", std::string("expected '") + kFormat +
                                          "'");
  const json& version = field(doc, "version", "");
  if (!version.is_number_integer() || version.get<int>() != kVersion)
    throw CertificateError("/version", "unsupported version");
  Certificate c;
  c.system = text_field(doc, "system", "");
  const json& tree = field(doc, "derivation", "");
  if (c.system == "iu")
    c.iu = read_iu(tree, "/derivation");
  else if (c.system == "simple")
    c.simple = read_simple(tree, "/derivation");
  else
    throw CertificateError("/system", "expected 'iu' or 'simple'");
  return c;
}

VerifyResult verify_certificate(std::string_view text) {
  Certificate c = read_certificate(text);
  VerifyResult r;
  r.system = c.system;
  if (c.iu) {
    r.nodes = count(*c.iu);
    r.check = check_derivation(*c.iu);
  } else {
    r.nodes = count(*c.simple);
    r.check = check_simple_derivation(*c.simple);
  }
  return r;
}

}  // namespace lammu
