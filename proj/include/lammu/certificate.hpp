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

#ifndef LAMMU_CERTIFICATE_HPP_
#define LAMMU_CERTIFICATE_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "lammu/derivation.hpp"
#include "lammu/simple_types.hpp"

namespace lammu {

// Malformed certificate document. `where` is a JSON pointer to the
// offending field.
class CertificateError : public std::runtime_error {
 public:
  CertificateError(const std::string& where, const std::string& msg);
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

// Serialized forms, pretty-printed with two-space indentation and a final
// newline; the layout is byte-stable.
std::string write_certificate(const Derivation& d);
std::string write_certificate(const SimpleDerivation& d);

struct Certificate {
  // "iu" or "simple"; exactly one of the trees is set.
  std::string system;
  std::optional<Derivation> iu;
  std::optional<SimpleDerivation> simple;
};

// Throws CertificateError, including for unparsable judgments.
Certificate read_certificate(std::string_view text);

struct VerifyResult {
  std::string system;
  std::size_t nodes = 0;
  CheckResult check;
  explicit operator bool() const { return check.ok; }
};

// Reads and checks node by node.
VerifyResult verify_certificate(std::string_view text);

}  // namespace lammu

#endif  // LAMMU_CERTIFICATE_HPP_
