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

#ifndef LAMMU_EXAMPLES_HPP_
#define LAMMU_EXAMPLES_HPP_

#include <string>
#include <string_view>
#include <vector>

namespace lammu {

struct Example {
  std::string name;
  // The judgment or claim the example reproduces.
  std::string summary;
  // Certificate of the main derivation (see docs/certificate-format.md).
  std::string certificate;
  // Human-readable derivation tree plus outcomes.
  std::string display;
};

// peirce, dne, no-choice, erasing
const std::vector<std::string>& example_names();

// Throws std::invalid_argument for an unknown name.
Example bundled_example(std::string_view name);

}  // namespace lammu

#endif  // LAMMU_EXAMPLES_HPP_
